"""
Schur Polynomial Tests

Module: tests.test_symfunc.test_schur
Purpose: Tableau-sum Schur polynomials, bialternant cross-check, Schur expansion
Status: Complete
Created: 2026-10-17
"""

from fractions import Fraction

import pytest
import sympy

from src.exactmath.multipoly import MultiPoly
from src.symfunc.schur import (
    SchurExpansion,
    complete_homogeneous,
    elementary,
    schur,
    schur_expand,
    semistandard_tableaux,
)
from src.utils.exceptions import DimensionMismatchError, NotSymmetricError
from src.young.partition import Partition, partitions_of


def _bialternant(nu: Partition, point):
    n = len(point)
    xs = [sympy.Rational(p.numerator, p.denominator) for p in point]
    numerator = sympy.Matrix(n, n, lambda i, j: xs[i] ** (nu[j] + n - 1 - j)).det()
    denominator = sympy.Matrix(n, n, lambda i, j: xs[i] ** (n - 1 - j)).det()
    return Fraction(str(sympy.nsimplify(numerator / denominator)))


class TestSchurPolynomial:
    """Test s_ν as a sum over semistandard tableaux"""

    def test_two_one_in_two_variables(self):
        """Test s_(2,1)(t1, t2) = t1^2 t2 + t1 t2^2"""
        assert schur(Partition.of(2, 1), 2).poly == MultiPoly(2, {(2, 1): 1, (1, 2): 1})

    def test_elementary(self):
        """Test e_2 in three variables has three unit terms"""
        e2 = elementary(2, 3).poly
        assert e2.terms == {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}

    def test_complete_homogeneous_zero(self):
        """Test h_0 = 1"""
        assert complete_homogeneous(0, 2).poly == MultiPoly.constant(2, 1)

    @pytest.mark.parametrize("parts,n,value", [((2, 1), 3, 8), ((2, 2), 3, 6), ((2,), 4, 10), ((1, 1), 4, 6)])
    def test_dimension_at_ones(self, parts, n, value):
        """Test s_ν(1, ..., 1) equals the GL_n dimension"""
        assert schur(Partition(parts), n).evaluate([1] * n) == value

    def test_truncated(self):
        """Test ℓ(ν) > n gives zero"""
        result = schur(Partition.of(1, 1, 1), 2)
        assert result.truncated
        assert result.poly.is_zero()

    def test_semistandard_count(self):
        """Test (2,1) has 8 fillings with entries 1..3"""
        assert len(semistandard_tableaux((2, 1), 3)) == 8

    @pytest.mark.parametrize("n", [2, 3])
    def test_symmetric(self, n):
        """Test every s_ν with |ν| <= 4 is symmetric"""
        for size in range(1, 5):
            for nu in partitions_of(size, max_rows=n):
                assert schur(nu, n).is_symmetric()

    @pytest.mark.parametrize("parts", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2, 1)])
    def test_matches_bialternant(self, parts):
        """Test the tableau sum against det(x^(ν+δ))/det(x^δ) in sympy"""
        point = [Fraction(2), Fraction(-1, 3), Fraction(5, 2)]
        nu = Partition(parts)
        assert schur(nu, 3).evaluate(point) == _bialternant(nu, point)

    def test_bad_n(self):
        """Test n = 0"""
        with pytest.raises(ValueError):
            schur(Partition.of(1), 0)


class TestSchurExpand:
    """Test expansion in the Schur basis"""

    def test_power_sum(self):
        """Test p_2 = s_(2) - s_(1,1)"""
        p2 = MultiPoly(2, {(2, 0): 1, (0, 2): 1})
        assert schur_expand(p2).terms == {Partition.of(2): 1, Partition.of(1, 1): -1}

    def test_square_of_h1(self):
        """Test h_1^2 = s_(2) + s_(1,1) in three variables"""
        h1 = complete_homogeneous(1, 3).poly
        assert schur_expand(h1 * h1).terms == {Partition.of(2): 1, Partition.of(1, 1): 1}

    def test_inhomogeneous(self):
        """Test constants and mixed degrees"""
        poly = schur(Partition.of(2), 2).poly * Fraction(1, 3) + 5
        assert schur_expand(poly).terms == {Partition.of(2): Fraction(1, 3), Partition(): 5}

    def test_round_trip(self):
        """Test to_polynomial inverts schur_expand"""
        expansion = SchurExpansion(3, {Partition.of(2, 1): Fraction(-2, 7), Partition.of(1, 1, 1): 3})
        assert schur_expand(expansion.to_polynomial()).terms == expansion.terms

    def test_not_symmetric(self):
        """Test a non-symmetric input names a monomial"""
        with pytest.raises(NotSymmetricError, match="monomial"):
            schur_expand(MultiPoly(2, {(1, 0): 1}))

    def test_too_many_rows(self):
        """Test an expansion term with ℓ(ν) > n"""
        with pytest.raises(DimensionMismatchError):
            SchurExpansion(2, {Partition.of(1, 1, 1): 1})

    def test_zero_coefficients_dropped(self):
        """Test zero terms are not stored"""
        expansion = SchurExpansion(2, {Partition.of(1): 0})
        assert expansion.is_zero()

    def test_arithmetic(self):
        """Test sums, differences and scaling"""
        a = SchurExpansion(2, {Partition.of(1): 1})
        b = SchurExpansion(2, {Partition.of(1): Fraction(1, 2), Partition.of(2): 1})
        assert (a - b).terms == {Partition.of(1): Fraction(1, 2), Partition.of(2): -1}
        assert (a * 4).coefficient(Partition.of(1)) == 4
