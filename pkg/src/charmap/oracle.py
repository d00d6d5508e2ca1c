"""
Characteristic Map by Direct Trace

Module: src.charmap.oracle
Purpose: ch(C) = (1/m!)·tr C·W1···Wm computed on (C^N)^⊗m
Status: Complete
Created: 2026-10-17

The brute-force side of every theorem check. An operator is paired with the
symbolic diagonal weights, divided by m! and Schur-expanded:

- general linear: W = diag(x1, ..., xN), expansion in the x's
- orthogonal / symplectic: W = diag(y1, ..., yn, [0], -yn, ..., -y1); only
  even powers survive, and the expansion is in t_i = y_i^2
"""

import logging
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Optional

from src.brauer.diagram import BrauerDiagram
from src.brauer.element import BrauerElement
from src.charmap.image import ChImage
from src.charmap.theorem import check_image_shape, require_brauer, resolve_rank
from src.symfunc.schur import SchurExpansion, schur_expand
from src.tensorrep.group_kind import GroupKind
from src.tensorrep.idempotents import IdempotentBuilder
from src.tensorrep.operator import TensorOperator
from src.tensorrep.represent import represent
from src.tensorrep.weights import DiagonalWeights, trace_against_diagonal
from src.young.characters import character
from src.young.partition import Partition
from src.young.tableau import dim

logger = logging.getLogger(__name__)


def characteristic(operator: TensorOperator, kind: GroupKind) -> SchurExpansion:
    """
    Schur expansion of (1/m!)·tr A·W1···Wm.

    Raises:
        ValueError: Odd powers of some y_i (not in the image of a centralizer element)
        NotSymmetricError: The trace is not symmetric
    """
    weights = DiagonalWeights.lie_algebra(kind)
    trace = trace_against_diagonal(operator, weights) / factorial(operator.m)
    if kind.is_brauer:
        trace = trace.halve_exponents()
    return schur_expand(trace)


def ch_oracle(
    shape: Partition,
    kind: GroupKind,
    n: Optional[int] = None,
    builder: Optional[IdempotentBuilder] = None,
) -> ChImage:
    """
    ch(φ_λ) from the explicit central idempotent φ_λ = (1/D)·Σ_T E_T.

    Raises:
        ValueError: General linear kind or empty λ
        ShapeBoundError: λ outside the group's bound
        SizeGuardError: N^m above the limit
    """
    require_brauer(kind)
    resolve_rank(kind, n)
    check_image_shape(shape, kind)
    builder = builder or IdempotentBuilder(kind)
    if builder.kind != kind:
        raise ValueError(f"Builder for {builder.kind} used with {kind}")
    phi = builder.central_idempotent(shape)
    expansion = characteristic(phi, kind)
    logger.info("ch_oracle(%s, %s): %d Schur terms", shape, kind, len(expansion.terms))
    return ChImage(shape, kind, expansion)


def gl_characteristic(element: BrauerElement, N: int) -> SchurExpansion:
    """
    ch(C) for C in the symmetric group span, as a Schur expansion in x1..xN.

    Raises:
        OmegaMismatchError: C has ε-type diagrams
    """
    kind = GroupKind.general_linear(N)
    return characteristic(represent(element, kind), kind)


def central_character_element(shape: Partition, omega=1) -> BrauerElement:
    """
    χ_λ = Σ_{s ∈ S_m} χ_λ(s)·s^{-1}, built from character values alone.
    """
    m = shape.size
    if m < 1:
        raise ValueError("λ must have at least one box")
    terms = {}
    for images in permutations(range(1, m + 1)):
        value = character(shape, _cycle_type(images))
        if not value:
            continue
        inverse = [0] * m
        for a, b in enumerate(images, start=1):
            inverse[b - 1] = a
        terms[BrauerDiagram.from_permutation(inverse)] = Fraction(value)
    return BrauerElement(m, omega, terms)


def character_operator(shape: Partition, N: int, builder: Optional[IdempotentBuilder] = None) -> TensorOperator:
    """(m!/dim λ)·Σ_T E_T on (C^N)^⊗m, the operator of χ_λ under GL_N."""
    builder = builder or IdempotentBuilder(GroupKind.general_linear(N))
    total = builder.idempotent_sum(shape)
    return total.scale(Fraction(factorial(shape.size), dim(shape)))


def _cycle_type(images) -> Partition:
    seen = set()
    lengths = []
    for start in range(1, len(images) + 1):
        if start in seen:
            continue
        length = 0
        k = start
        while k not in seen:
            seen.add(k)
            k = images[k - 1]
            length += 1
        lengths.append(length)
    return Partition(tuple(sorted(lengths, reverse=True)))


__all__ = [
    "ch_oracle",
    "character_operator",
    "central_character_element",
    "characteristic",
    "gl_characteristic",
]
