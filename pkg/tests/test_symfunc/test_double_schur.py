"""
Double Schur Polynomial Tests

Module: tests.test_symfunc.test_double_schur
Purpose: Parameter sequences, vanishing, symmetry and the row/column closed forms
Status: Complete
Created: 2026-10-17
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.symfunc.double_schur import column_product, column_value, double_schur, row_value
from src.symfunc.schur import schur
from src.symfunc.sequences import VALID_EPSILONS, ParameterSequence, a_rho, sequence_for_epsilon
from src.utils.exceptions import DimensionMismatchError, ShapeBoundError
from src.young.partition import Partition, partitions_of

N_VARS = 3
SHAPES = [p for size in range(0, 5) for p in partitions_of(size, max_rows=N_VARS)]
sequences = st.sampled_from(VALID_EPSILONS).map(ParameterSequence)


class TestParameterSequence:
    """Test a_i = (ε + i - 1)^2 and the special points a_ρ"""

    def test_values(self):
        """Test the first terms for ε = 1/2"""
        a = sequence_for_epsilon("1/2")
        assert [a(i) for i in (1, 2, 3)] == [Fraction(1, 4), Fraction(9, 4), Fraction(25, 4)]

    def test_zero_sequence(self):
        """Test the vanishing sequence"""
        assert ParameterSequence.zero()(7) == 0

    def test_invalid_epsilon(self):
        """Test ε outside {0, 1/2, 1}"""
        with pytest.raises(ValueError):
            ParameterSequence(Fraction(2))

    def test_a_rho(self):
        """Test a_(1) in two variables for ε = 0"""
        assert a_rho(Partition.of(1), 2, ParameterSequence(0)) == (4, 0)

    def test_a_rho_too_long(self):
        """Test ℓ(ρ) > n"""
        with pytest.raises(ShapeBoundError):
            a_rho(Partition.of(1, 1, 1), 2, ParameterSequence(0))

    def test_effective_rank(self):
        """Test 2n + 2ε is N for orthogonal sequences"""
        assert ParameterSequence(Fraction(1, 2)).effective_rank(3) == 7


class TestDoubleSchur:
    """Test s_ν(x | a)"""

    def test_single_box(self):
        """Test s_(1)(x | a) = (x1 - a1) + (x2 - a2)"""
        a = ParameterSequence(0)
        poly = double_schur(Partition.of(1), 2, a)
        assert poly([5, 7]) == (5 - 0) + (7 - 1)

    @pytest.mark.parametrize("epsilon", VALID_EPSILONS)
    def test_vanishing(self, epsilon):
        """Test s_ν(a_ρ | a) = 0 unless ν ⊆ ρ, and s_ν(a_ν | a) != 0"""
        a = ParameterSequence(epsilon)
        for nu in SHAPES:
            poly = double_schur(nu, N_VARS, a)
            for rho in SHAPES:
                value = poly.at_rho(rho)
                if not rho.contains(nu):
                    assert value == 0, (nu, rho)
                if rho == nu:
                    assert value != 0, nu

    @given(sequences, st.sampled_from(SHAPES))
    def test_symmetric(self, a, nu):
        """Test s_ν(x | a) is symmetric in x"""
        assert double_schur(nu, N_VARS, a).to_polynomial().is_symmetric()

    @pytest.mark.parametrize("parts", [(1,), (2, 1), (2, 2), (3, 1, 1)])
    def test_zero_sequence_reduces_to_schur(self, parts):
        """Test s_ν(x | 0) = s_ν(x)"""
        nu = Partition(parts)
        assert double_schur(nu, N_VARS, ParameterSequence.zero()).to_polynomial() == schur(nu, N_VARS).poly

    def test_top_degree_is_schur(self):
        """Test the leading homogeneous part is s_ν"""
        nu = Partition.of(2, 1)
        poly = double_schur(nu, N_VARS, ParameterSequence(1)).to_polynomial()
        assert poly.homogeneous_component(3) == schur(nu, N_VARS).poly

    def test_too_many_rows(self):
        """Test ℓ(ν) > n"""
        with pytest.raises(ShapeBoundError):
            double_schur(Partition.of(1, 1, 1, 1), N_VARS, ParameterSequence(0))

    def test_wrong_point_length(self):
        """Test a point with the wrong number of coordinates"""
        with pytest.raises(DimensionMismatchError):
            double_schur(Partition.of(1), N_VARS, ParameterSequence(0)).evaluate([1, 2])


class TestClosedForms:
    """Test the row and column factorizations against direct evaluation"""

    @pytest.mark.parametrize("epsilon", VALID_EPSILONS)
    @pytest.mark.parametrize("l", [1, 2])
    def test_row_value(self, epsilon, l):
        """Test s_(l)(a_(k) | a) for l <= k <= 2l"""
        a, n = ParameterSequence(epsilon), 3
        poly = double_schur(Partition.of(l), n, a)
        for k in range(l, 2 * l + 1):
            assert poly.at_rho(Partition.of(k)) == row_value(l, k, n, a)

    @pytest.mark.parametrize("epsilon", VALID_EPSILONS)
    @pytest.mark.parametrize("l", [1, 2])
    def test_column_value(self, epsilon, l):
        """Test s_(1^l)(a_(1^k) | a) for l <= k <= 2l <= n"""
        a, n = ParameterSequence(epsilon), 4
        poly = double_schur(Partition((1,) * l), n, a)
        for k in range(l, 2 * l + 1):
            value = poly.at_rho(Partition((1,) * k))
            assert value == column_value(l, k, n, a) == column_product(l, k, n, a)

    def test_orthogonal_column_formula(self):
        """Test the factorial form k!(N-k)!/((k-l)!(N-k-l)!) at N = 8, l = 1, k = 2"""
        a = ParameterSequence(0)
        assert column_value(1, 2, 4, a) == Fraction(2 * 6)
