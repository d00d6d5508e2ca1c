"""
Characteristic Map Tests

Module: tests.test_charmap.test_charmap
Purpose: Closed-form ch(φ_λ) against the trace oracle and the worked examples
Status: Complete
Created: 2026-10-17
"""

from fractions import Fraction

import pytest

from src.charmap.image import ChImage
from src.charmap.oracle import (
    central_character_element,
    ch_oracle,
    character_operator,
    characteristic,
    gl_characteristic,
)
from src.charmap.theorem import (
    c_constant,
    ch_theorem,
    normalized_symmetrizer,
    row_column_inner_sum,
    symmetrizer_image,
)
from src.symfunc.schur import SchurExpansion
from src.tensorrep.group_kind import GroupKind
from src.tensorrep.represent import represent
from src.utils.exceptions import DimensionMismatchError, ShapeBoundError
from src.young.partition import Partition, partitions_of

S2 = Partition.of(2)
S11 = Partition.of(1, 1)
S1 = Partition.of(1)


class TestWorkedExamples:
    """Test published coefficients"""

    def test_exterior_square(self, orthogonal6):
        """Test ch(φ_(1,1)) = -1/30 s_(1) on O_6"""
        assert ch_theorem(S11, orthogonal6).expansion.terms == {S1: Fraction(-1, 30)}

    def test_symmetric_square(self, orthogonal6):
        """Test ch(φ_(2)) = 1/30 s_(1) on O_6"""
        assert ch_theorem(S2, orthogonal6).expansion.terms == {S1: Fraction(1, 30)}

    @pytest.mark.acceptance
    @pytest.mark.parametrize("N,row,column", [(6, Fraction(1, 1680), Fraction(1, 360)), (7, Fraction(1, 3024), Fraction(1, 840))])
    def test_two_two(self, N, row, column):
        """Test ch(φ_(2,2)) = c1 s_(2) + c2 s_(1,1) on O_6 and O_7"""
        image = ch_theorem(Partition.of(2, 2), GroupKind.orthogonal(N), n=3)
        assert image.expansion.terms == {S2: row, S11: column}

    @pytest.mark.acceptance
    def test_two_two_row_coefficient_formula(self):
        """Test the s_(2) coefficient is 1/((N-1)N(N+1)(N+2)) for N = 6, 7, 8"""
        for N in (6, 7, 8):
            image = ch_theorem(Partition.of(2, 2), GroupKind.orthogonal(N))
            assert image.coefficient(S2) == Fraction(1, (N - 1) * N * (N + 1) * (N + 2))

    def test_symplectic_square(self, symplectic6):
        """Test ch(φ_(2)) = -1/42 s_(1) and the symmetrizer image -1/3 s_(1) on Sp_6"""
        assert ch_theorem(S2, symplectic6).expansion.terms == {S1: Fraction(-1, 42)}
        assert symmetrizer_image(1, symplectic6).expansion.terms == {S1: Fraction(-1, 3)}


class TestTheorem:
    """Test structural properties of the closed form"""

    @pytest.mark.parametrize("parts", [(1,), (2, 1), (3,), (1, 1, 1)])
    def test_odd_size_vanishes(self, orthogonal6, parts):
        """Test ch(φ_λ) = 0 for |λ| odd"""
        assert ch_theorem(Partition(parts), orthogonal6).is_zero()

    @pytest.mark.parametrize("kind", [GroupKind.orthogonal(6), GroupKind.orthogonal(7), GroupKind.symplectic(6), GroupKind.symplectic(8)])
    @pytest.mark.parametrize("parts", [(2, 2), (3, 1), (2, 1, 1), (4,), (3, 3)])
    def test_pruning_is_exact(self, kind, parts):
        """Test skipping the vanishing terms does not change the result"""
        shape = Partition(parts)
        if not kind.shape_bound_ok(shape):
            pytest.skip(f"{shape} outside the bound of {kind}")
        assert ch_theorem(shape, kind, prune=True) == ch_theorem(shape, kind, prune=False)

    @pytest.mark.parametrize("kind", [GroupKind.orthogonal(6), GroupKind.orthogonal(9), GroupKind.symplectic(8)])
    @pytest.mark.parametrize("l", [1, 2])
    @pytest.mark.parametrize("anti", [False, True])
    def test_row_and_column_closed_forms(self, kind, l, anti):
        """Test ch_theorem on (2l) and (1^2l) against the symmetrizer formulas"""
        shape = Partition((1,) * (2 * l)) if anti else Partition((2 * l,))
        if not kind.shape_bound_ok(shape):
            pytest.skip(f"{shape} outside the bound of {kind}")
        expected = normalized_symmetrizer(l, kind, anti=anti)
        assert ch_theorem(expected.shape, kind) == expected

    def test_row_column_inner_sum_is_single_term(self, orthogonal6):
        """Test the μ-sum for (2) divided by C((1)) is the whole image"""
        value = row_column_inner_sum(S2, orthogonal6) / c_constant(S1, orthogonal6)
        assert ch_theorem(S2, orthogonal6).coefficient(S1) == value

    def test_row_column_inner_sum_rejects_other_shapes(self, orthogonal6):
        """Test (2,1) is neither a row nor a column"""
        with pytest.raises(ValueError, match="row or column"):
            row_column_inner_sum(Partition.of(2, 1), orthogonal6)

    def test_c_constant(self, orthogonal6):
        """Test C((1)) = 2n(N-1+2ε) = 30 on O_6"""
        assert c_constant(S1, orthogonal6) == 30


class TestErrors:
    """Test rejected inputs"""

    def test_empty_shape(self, orthogonal6):
        """Test λ = ∅"""
        with pytest.raises(ValueError, match="at least one box"):
            ch_theorem(Partition(), orthogonal6)

    def test_rank_mismatch(self, orthogonal6):
        """Test n != floor(N/2)"""
        with pytest.raises(DimensionMismatchError):
            ch_theorem(S2, orthogonal6, n=2)

    def test_general_linear(self):
        """Test ch in y^2 needs O_N or Sp_N"""
        with pytest.raises(ValueError, match="O_N and Sp_N"):
            ch_theorem(S2, GroupKind.general_linear(3))

    def test_shape_bound(self, symplectic6):
        """Test λ_1 > n for Sp_6"""
        with pytest.raises(ShapeBoundError):
            ch_theorem(Partition.of(4), symplectic6)

    def test_symmetrizer_index(self, orthogonal6):
        """Test l = 0"""
        with pytest.raises(ValueError):
            symmetrizer_image(0, orthogonal6)

    def test_image_rank_check(self, orthogonal6):
        """Test an expansion in the wrong number of variables"""
        with pytest.raises(DimensionMismatchError):
            ChImage(S2, orthogonal6, SchurExpansion(2))


class TestOracle:
    """Test the closed form against explicit idempotents"""

    @pytest.mark.parametrize("kind", [GroupKind.orthogonal(4), GroupKind.orthogonal(5), GroupKind.symplectic(4)])
    @pytest.mark.parametrize("parts", [(2,), (1, 1)])
    def test_agrees_on_two_boxes(self, builders, kind, parts):
        """Test ch_theorem = ch_oracle for |λ| = 2"""
        shape = Partition(parts)
        assert ch_theorem(shape, kind) == ch_oracle(shape, kind, builder=builders(kind))

    def test_odd_size_vanishes(self, builders):
        """Test the oracle also gives zero for (2,1)"""
        kind = GroupKind.orthogonal(4)
        assert ch_oracle(Partition.of(2, 1), kind, builder=builders(kind)).is_zero()

    @pytest.mark.slow
    @pytest.mark.parametrize("parts", [(2, 2), (3, 1), (4,)])
    def test_agrees_on_four_boxes(self, builders, parts):
        """Test ch_theorem = ch_oracle for |λ| = 4 on O_4"""
        kind = GroupKind.orthogonal(4)
        shape = Partition(parts)
        assert ch_theorem(shape, kind) == ch_oracle(shape, kind, builder=builders(kind))

    @pytest.mark.slow
    @pytest.mark.acceptance
    @pytest.mark.parametrize("N,row,column", [(6, Fraction(1, 1680), Fraction(1, 360)), (7, Fraction(1, 3024), Fraction(1, 840))])
    def test_two_two_oracle(self, builders, N, row, column):
        """Test the explicit trace reproduces the (2,2) coefficients on O_6 and O_7"""
        kind = GroupKind.orthogonal(N)
        image = ch_oracle(Partition.of(2, 2), kind, builder=builders(kind))
        assert image.expansion.terms == {S2: row, S11: column}

    @pytest.mark.slow
    @pytest.mark.acceptance
    @pytest.mark.parametrize("kind", [GroupKind.orthogonal(5), GroupKind.orthogonal(6), GroupKind.symplectic(6)])
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_agrees_up_to_four_boxes(self, builders, kind, m):
        """Test ch_theorem = ch_oracle for every λ ⊢ m inside the bound"""
        for shape in partitions_of(m):
            if kind.shape_bound_ok(shape):
                assert ch_theorem(shape, kind) == ch_oracle(shape, kind, builder=builders(kind)), shape

    def test_builder_kind_mismatch(self, builders, orthogonal6):
        """Test a builder for another group"""
        with pytest.raises(ValueError, match="Builder"):
            ch_oracle(S2, orthogonal6, builder=builders(GroupKind.orthogonal(4)))


class TestGeneralLinear:
    """Test ch on the symmetric group span"""

    @pytest.mark.parametrize("parts,N", [((2,), 2), ((1, 1), 3), ((2, 1), 3)])
    def test_character_maps_to_schur(self, parts, N):
        """Test ch(χ_λ) = s_λ"""
        shape = Partition(parts)
        assert gl_characteristic(central_character_element(shape), N).terms == {shape: 1}

    def test_character_operator(self, builders):
        """Test χ_λ acts as (m!/dim λ) Σ_T E_T"""
        kind = GroupKind.general_linear(3)
        shape = Partition.of(2, 1)
        operator = character_operator(shape, 3, builder=builders(kind))
        assert represent(central_character_element(shape), kind) == operator
        assert characteristic(operator, kind).terms == {shape: 1}

    def test_empty_character(self):
        """Test χ_∅ is rejected"""
        with pytest.raises(ValueError):
            central_character_element(Partition())
