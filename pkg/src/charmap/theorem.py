"""
Closed Form of the Characteristic Map

Module: src.charmap.theorem
Purpose: ch(φ_λ) through double Schur polynomials, and the row/column closed forms
Status: Complete
Created: 2026-10-17

For λ with m = 2l boxes the image of the central idempotent φ_λ is

    ch(φ_λ) = Σ_{ν ⊢ l} s_ν(y1^2, ..., yn^2) / C(ν)
              · Σ_{μ ⊆ λ} (-1)^|μ| s_ν(a_ρ | a) / (H(μ) H(λ/μ))

with ρ = μ for the orthogonal group and ρ = μ' for the symplectic group,
and a_i = (ε + i - 1)^2. For odd m the image is zero.

s_ν(a_ρ | a) vanishes unless ν ⊆ ρ, so only ν ⊆ λ (orthogonal) or ν ⊆ λ'
(symplectic) and μ with ν ⊆ ρ contribute. `prune=False` runs the full sums.
"""

import logging
from fractions import Fraction
from math import factorial, prod
from typing import Dict, List, Optional

from src.charmap.image import ChImage
from src.groups.dimensions import trace_dimension
from src.symfunc.double_schur import double_schur
from src.symfunc.schur import SchurExpansion, complete_homogeneous, elementary, schur_expand
from src.symfunc.sequences import sequence_for_epsilon
from src.tensorrep.group_kind import GroupFamily, GroupKind
from src.utils.exceptions import DimensionMismatchError, ShapeBoundError
from src.young.hooks import hook_product
from src.young.partition import Partition, SkewShape, partitions_of, sub_partitions

logger = logging.getLogger(__name__)


def require_brauer(kind: GroupKind) -> None:
    if not kind.is_brauer:
        raise ValueError(f"The characteristic map in y^2 is defined for O_N and Sp_N, not {kind}")


def resolve_rank(kind: GroupKind, n: Optional[int]) -> int:
    if n is None:
        return kind.n
    if n != kind.n:
        raise DimensionMismatchError(f"{kind} has rank n = {kind.n}; got n = {n}")
    return n


def check_image_shape(shape: Partition, kind: GroupKind) -> None:
    if shape.is_empty():
        raise ValueError("λ must have at least one box")
    kind.check_shape(shape)


def c_constant(nu: Partition, kind: GroupKind) -> Fraction:
    """
    C(ν) = Π_{(i,j) ∈ ν} 2(n + j - i)(N - 1 + 2(j - i + ε)).

    Raises:
        ShapeBoundError: ℓ(ν) > n
    """
    require_brauer(kind)
    n, N, eps = kind.n, kind.N, kind.epsilon
    if nu.length > n:
        raise ShapeBoundError(f"C(ν) needs ℓ(ν) <= n = {n}; ν = {nu}")
    return prod(
        (2 * (n + j - i) * (N - 1 + 2 * (j - i + eps)) for (i, j) in nu.boxes()),
        start=Fraction(1),
    )


def specialization(mu: Partition, kind: GroupKind) -> Partition:
    """ρ = μ (orthogonal) or μ' (symplectic)."""
    return mu.conjugate() if kind.family is GroupFamily.SYMPLECTIC else mu


def inner_sum(shape: Partition, nu: Partition, kind: GroupKind, prune: bool = True) -> Fraction:
    """Σ_{μ ⊆ λ} (-1)^|μ| s_ν(a_ρ | a) / (H(μ) H(λ/μ))"""
    a = sequence_for_epsilon(kind.epsilon)
    poly = double_schur(nu, kind.n, a)
    total = Fraction(0)
    for mu in sub_partitions(shape):
        rho = specialization(mu, kind)
        if prune and not rho.contains(nu):
            continue
        value = poly.at_rho(rho)
        if not value:
            continue
        total += (-1) ** mu.size * value / (hook_product(mu) * hook_product(SkewShape(shape, mu)))
    return total


def candidate_nus(shape: Partition, kind: GroupKind, prune: bool = True) -> List[Partition]:
    l = shape.size // 2
    if not prune:
        return partitions_of(l, max_rows=kind.n)
    bound = shape.conjugate() if kind.family is GroupFamily.SYMPLECTIC else shape
    return [nu for nu in partitions_of(l, max_rows=kind.n) if bound.contains(nu)]


def ch_theorem(shape: Partition, kind: GroupKind, n: Optional[int] = None, prune: bool = True) -> ChImage:
    """
    ch(φ_λ) in closed form.

    Raises:
        ValueError: General linear kind or empty λ
        ShapeBoundError: λ outside the group's bound
        DimensionMismatchError: n differs from floor(N/2)
    """
    require_brauer(kind)
    resolve_rank(kind, n)
    check_image_shape(shape, kind)
    if shape.size % 2:
        logger.debug("ch of φ_%s vanishes: odd number of boxes", shape)
        return ChImage.zero(shape, kind)

    terms: Dict[Partition, Fraction] = {}
    for nu in candidate_nus(shape, kind, prune):
        total = inner_sum(shape, nu, kind, prune)
        if total:
            terms[nu] = total / c_constant(nu, kind)
    logger.info("ch_theorem(%s, %s): %d Schur terms", shape, kind, len(terms))
    return ChImage(shape, kind, SchurExpansion(kind.n, terms))


def row_column_inner_sum(shape: Partition, kind: GroupKind) -> Fraction:
    """
    The μ-sum for a row (2l) or column (1^2l), taken at the only ν that
    survives: (l) or (1^l) as ν ⊆ λ (orthogonal) or ν ⊆ λ' (symplectic).

    Raises:
        ValueError: shape is neither a row nor a column with an even number of boxes
    """
    require_brauer(kind)
    size = shape.size
    if size == 0 or size % 2 or (shape.length > 1 and shape[0] > 1):
        raise ValueError(f"{shape} is not a row or column with an even number of boxes")
    l = size // 2
    bound = shape.conjugate() if kind.family is GroupFamily.SYMPLECTIC else shape
    nu = Partition((l,)) if bound.length == 1 else Partition((1,) * l)
    return inner_sum(shape, nu, kind)


def symmetrizer_image(l: int, kind: GroupKind, n: Optional[int] = None, anti: bool = False) -> ChImage:
    """
    ch of the symmetrizer S^(2l) (anti=False) or antisymmetrizer A^(2l):

    - orthogonal S: (N+4l-2)/((2l)!(N+2l-2)) · h_l
    - orthogonal A: (-1)^l/(2l)! · e_l
    - symplectic S: (-1)^l (n-2l+1)/((2l)!(n-l+1)) · e_l
    - symplectic A: 1/(2l)! · h_l

    These are D·ch(φ_λ) for λ = (2l) or (1^2l).

    Raises:
        ValueError: l < 1 or general linear kind
        ShapeBoundError: 2l > n for the orthogonal A or symplectic S
    """
    require_brauer(kind)
    n = resolve_rank(kind, n)
    if l < 1:
        raise ValueError(f"l must be positive, got {l}")
    shape = Partition((1,) * (2 * l)) if anti else Partition((2 * l,))
    kind.check_shape(shape)

    N = kind.N
    scale = Fraction(1, factorial(2 * l))
    if kind.family is GroupFamily.ORTHOGONAL:
        if anti:
            coeff, poly = (-1) ** l * scale, elementary(l, n)
        else:
            coeff, poly = scale * Fraction(N + 4 * l - 2, N + 2 * l - 2), complete_homogeneous(l, n)
    else:
        if anti:
            coeff, poly = scale, complete_homogeneous(l, n)
        else:
            coeff, poly = (-1) ** l * scale * Fraction(n - 2 * l + 1, n - l + 1), elementary(l, n)
    return ChImage(shape, kind, schur_expand(poly).scaled(coeff))


def normalized_symmetrizer(l: int, kind: GroupKind, anti: bool = False) -> ChImage:
    """symmetrizer_image divided by D: the value ch_theorem must give on the row or column."""
    image = symmetrizer_image(l, kind, anti=anti)
    return image.scaled(1 / trace_dimension(image.shape, kind))


__all__ = [
    "c_constant",
    "candidate_nus",
    "ch_theorem",
    "inner_sum",
    "normalized_symmetrizer",
    "row_column_inner_sum",
    "specialization",
    "symmetrizer_image",
]
