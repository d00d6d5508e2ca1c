"""
Dimension Formulas

Module: src.groups.dimensions
Purpose: Hook-type dimension formulas for GL_N, O_N and Sp_N irreducibles
Status: Complete
Created: 2026-10-17

Every formula is a product of linear factors in N over the boxes (i, j) of
the shape, divided by the hook product H(λ):

- GL_N (Robinson):  factors N + j - i
- O_N:              factors N - 1 + d(i, j),
                    d(i, j) = λi + λj - i - j + 1      if i <= j
                            = -λ'i - λ'j + i + j - 1   if i > j
- Sp_N:             factors N + 1 + d(i, j) with the two branch
                    conditions exchanged (row branch when i > j)

The factor lists are kept on the report: the case split of d(i, j) is where
mistakes hide.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import List

from src.tensorrep.group_kind import GroupFamily, GroupKind
from src.utils.exceptions import ShapeBoundError
from src.young.hooks import hook_length_product
from src.young.partition import Partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DimensionReport:
    """value = Π factors / H(shape)"""

    group: GroupKind
    shape: Partition
    value: Fraction
    factors: List[int] = field(default_factory=list)
    hook_product: int = 1


def d_orthogonal(shape: Partition, i: int, j: int) -> int:
    conjugate = shape.conjugate()
    if i <= j:
        return shape.row(i) + shape.row(j) - i - j + 1
    return -conjugate.row(i) - conjugate.row(j) + i + j - 1


def d_symplectic(shape: Partition, i: int, j: int) -> int:
    conjugate = shape.conjugate()
    if i > j:
        return shape.row(i) + shape.row(j) - i - j + 1
    return -conjugate.row(i) - conjugate.row(j) + i + j - 1


def factors_for(shape: Partition, N: int, family: GroupFamily) -> List[int]:
    """Linear factors of the dimension formula, box by box, for any integer N."""
    if family is GroupFamily.GENERAL_LINEAR:
        return [N + j - i for (i, j) in shape.boxes()]
    if family is GroupFamily.ORTHOGONAL:
        return [N - 1 + d_orthogonal(shape, i, j) for (i, j) in shape.boxes()]
    return [N + 1 + d_symplectic(shape, i, j) for (i, j) in shape.boxes()]


def factor_product(shape: Partition, N: int, family: GroupFamily) -> int:
    return prod(factors_for(shape, N, family))


def _report(shape: Partition, kind: GroupKind) -> DimensionReport:
    factors = factors_for(shape, kind.N, kind.family)
    hooks = hook_length_product(shape)
    value = Fraction(prod(factors), hooks)
    logger.debug("dim %s of %s: %s / %d = %s", shape, kind, factors, hooks, value)
    return DimensionReport(kind, shape, value, factors, hooks)


def dim_gl(shape: Partition, N: int) -> DimensionReport:
    """
    Raises:
        ShapeBoundError: ℓ(λ) > N
    """
    kind = GroupKind.general_linear(N)
    kind.check_shape(shape)
    return _report(shape, kind)


def dim_orth(shape: Partition, N: int) -> DimensionReport:
    """
    D(λ) for O_N.

    Raises:
        ShapeBoundError: λ'_1 > n
    """
    kind = GroupKind.orthogonal(N)
    kind.check_shape(shape)
    return _report(shape, kind)


def dim_sp(shape: Partition, N: int) -> DimensionReport:
    """
    D(ρ) for Sp_N.

    Raises:
        ValueError: N odd
        ShapeBoundError: ℓ(ρ) > n
    """
    kind = GroupKind.symplectic(N)
    if shape.length > kind.n:
        raise ShapeBoundError(f"Sp_{N} needs ℓ(ρ) <= n = {kind.n}; ρ = {shape} has {shape.length} rows")
    return _report(shape, kind)


def dimension(shape: Partition, kind: GroupKind) -> DimensionReport:
    """The irreducible of `kind` labelled by `shape` itself."""
    if kind.family is GroupFamily.ORTHOGONAL:
        return dim_orth(shape, kind.N)
    if kind.family is GroupFamily.SYMPLECTIC:
        return dim_sp(shape, kind.N)
    return dim_gl(shape, kind.N)


def trace_dimension(shape: Partition, kind: GroupKind) -> Fraction:
    """
    Trace of E_T for a tableau of this shape: D(λ) (orthogonal), D(λ')
    (symplectic) or dim L(λ) (general linear).
    """
    if kind.family is GroupFamily.SYMPLECTIC:
        kind.check_shape(shape)
        return dim_sp(shape.conjugate(), kind.N).value
    return dimension(shape, kind).value


def duality_check(shape: Partition, N: int) -> bool:
    """
    The orthogonal factor product of λ at -N equals (-1)^|λ| times the
    symplectic factor product of λ' at N.
    """
    orthogonal = factor_product(shape, -N, GroupFamily.ORTHOGONAL)
    symplectic = factor_product(shape.conjugate(), N, GroupFamily.SYMPLECTIC)
    return orthogonal == (-1) ** shape.size * symplectic


def partial_trace_ratio(shape: Partition, smaller: Partition, kind: GroupKind) -> Fraction:
    """
    Scalar r with tr_m E_T = r·E_U when T has shape λ and U has shape μ:
    D(λ)/D(μ) (orthogonal), D(λ')/D(μ') (symplectic), (N + c)·H(μ)/H(λ)
    (general linear, c the content of the box λ/μ).

    Raises:
        ValueError: μ is not λ with one box removed
    """
    if not (shape.contains(smaller) and shape.size == smaller.size + 1):
        raise ValueError(f"{smaller} is not {shape} with one box removed")
    if kind.family is GroupFamily.GENERAL_LINEAR:
        (i, j), = [box for box in shape.boxes() if box not in set(smaller.boxes())]
        return Fraction((kind.N + j - i) * hook_length_product(smaller), hook_length_product(shape))
    return trace_dimension(shape, kind) / trace_dimension(smaller, kind)


__all__ = [
    "DimensionReport",
    "d_orthogonal",
    "d_symplectic",
    "dim_gl",
    "dim_orth",
    "dim_sp",
    "dimension",
    "duality_check",
    "factor_product",
    "factors_for",
    "partial_trace_ratio",
    "trace_dimension",
]
