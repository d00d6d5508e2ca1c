"""
Tensor Representation of Brauer Diagrams

Module: src.tensorrep.represent
Purpose: Matrices of B_m(±N) and C[S_m] elements on (C^N)^⊗m
Status: Complete
Created: 2026-10-17

Rows are indexed by the top row of a diagram, columns by the bottom row.
An m-diagram d with f top arcs factors as d = π1·(ε12 ε34 ... ε_{2f-1,2f})·π2
with permutations π1, π2 chosen so that every arc is read left to right.
Its matrix entry at (i, j) is then

    sign · Π_{top arcs a<b} g(i_a, i_b) · Π_{bottom arcs a<b} g(j_a, j_b)
         · Π_{through strings a-b'} δ(i_a, j_b)

with sign = 1 for the orthogonal group and sgn(π1)·sgn(π2)·(-1)^f for the
symplectic group, where s_ab acts as -P_ab and ε_ab as -Q_ab. The general
linear group only accepts permutations and uses s_ab ↦ P_ab.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, List, Sequence, Tuple

from src.brauer.diagram import BrauerDiagram
from src.brauer.element import BrauerElement
from src.exactmath.rational import format_rational
from src.exactmath.sparse import SparseMatrix
from src.tensorrep.group_kind import GroupFamily, GroupKind
from src.tensorrep.operator import TensorOperator, decode, encode
from src.utils.exceptions import OmegaMismatchError

logger = logging.getLogger(__name__)


def permutation_sign(images: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct values."""
    seen = set()
    sign = 1
    order = sorted(images)
    position = {value: k for k, value in enumerate(order)}
    perm = [position[v] for v in images]
    for start in range(len(perm)):
        if start in seen:
            continue
        length = 0
        k = start
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def factorization_sign(diagram: BrauerDiagram) -> int:
    """
    sgn(π1)·sgn(π2)·(-1)^f for the factorization whose hooks read arcs
    left to right and whose through strings keep the top order.
    """
    m = diagram.m
    top_arcs = diagram.top_arcs()
    bottom_arcs = diagram.bottom_arcs()
    through = sorted(diagram.through_strings())
    # π1^{-1} lists top dots in the order they enter ε12 ε34 ... then the strings
    inverse_first = [dot for arc in top_arcs for dot in arc] + [u for u, _ in through]
    # π2 lists bottom dots in the same order
    second = [dot - m for arc in bottom_arcs for dot in arc] + [v - m for _, v in through]
    return permutation_sign(inverse_first) * permutation_sign(second) * (-1) ** len(top_arcs)


@lru_cache(maxsize=None)
def diagram_matrix(diagram: BrauerDiagram, kind: GroupKind) -> SparseMatrix:
    """
    Integer matrix of one diagram.

    Raises:
        OmegaMismatchError: Horizontal arcs under the general linear group
    """
    m, N = diagram.m, kind.N
    top_arcs = diagram.top_arcs()
    bottom_arcs = [(u - m, v - m) for u, v in diagram.bottom_arcs()]
    through = [(u, v - m) for u, v in diagram.through_strings()]

    if kind.family is GroupFamily.GENERAL_LINEAR:
        if top_arcs:
            raise OmegaMismatchError(f"Diagram {diagram} has arcs; GL_{N} only represents permutations")
        sign = 1
    elif kind.family is GroupFamily.ORTHOGONAL:
        sign = 1
    else:
        sign = factorization_sign(diagram)

    rows: Dict[int, Dict[int, int]] = {}
    bottom_choices = [range(N)] * len(bottom_arcs)
    for top in product(range(N), repeat=m):
        weight = sign
        for a, b in top_arcs:
            weight *= kind.form(top[a], top[b])
            if not weight:
                break
        if not weight:
            continue
        bottom = [0] * m
        for a, b in through:
            bottom[b] = top[a]
        row: Dict[int, int] = {}
        for choice in product(*bottom_choices):
            value = weight
            for (a, b), i in zip(bottom_arcs, choice):
                bottom[a] = i
                bottom[b] = kind.prime(i)
                value *= kind.form(i, bottom[b])
            if value:
                row[encode(bottom, N)] = value
        if row:
            rows[encode(top, N)] = row
    return SparseMatrix.from_rows(N ** m, rows)


def _check_element(element: BrauerElement, kind: GroupKind) -> None:
    if kind.is_brauer:
        if element.omega != kind.omega:
            raise OmegaMismatchError(
                f"Element of B_{element.m}({format_rational(element.omega)}) cannot act through "
                f"{kind} (needs ω = {format_rational(kind.omega)})"
            )
    elif not element.in_symmetric_span():
        raise OmegaMismatchError(f"GL_{kind.N} only represents the symmetric group span; got ε-type diagrams")


def represent(element: BrauerElement, kind: GroupKind) -> TensorOperator:
    """
    Operator of a Brauer algebra element on (C^N)^⊗m.

    Raises:
        OmegaMismatchError: ω differs from the group's, or ε-diagrams under GL
    """
    _check_element(element, kind)
    total = SparseMatrix(kind.N ** element.m)
    for diagram, coeff in element:
        total = total + diagram_matrix(diagram, kind).scale(coeff)
    logger.debug("Represented %d-term element on %s: nnz=%d", len(element.terms), kind, total.nnz)
    return TensorOperator(kind.N, element.m, total)


def swap_matrix(a: int, b: int, N: int, m: int) -> SparseMatrix:
    """P_ab: exchange tensor factors a and b (1-based)."""
    rows = {}
    for top in product(range(N), repeat=m):
        bottom = list(top)
        bottom[a - 1], bottom[b - 1] = bottom[b - 1], bottom[a - 1]
        rows[encode(top, N)] = {encode(bottom, N): 1}
    return SparseMatrix.from_rows(N ** m, rows)


def contraction_matrix(a: int, b: int, kind: GroupKind, m: int) -> SparseMatrix:
    """Q_ab with entries g(i_a, i_b)·g(j_a, j_b) and δ elsewhere."""
    N = kind.N
    rows: Dict[int, Dict[int, int]] = {}
    for index in range(N ** m):
        top = decode(index, N, m)
        left = kind.form(top[a - 1], top[b - 1])
        if not left:
            continue
        row = {}
        for i in range(N):
            bottom = list(top)
            bottom[a - 1], bottom[b - 1] = i, kind.prime(i)
            row[encode(bottom, N)] = left * kind.form(i, kind.prime(i))
        rows[index] = row
    return SparseMatrix.from_rows(N ** m, rows)


__all__ = [
    "contraction_matrix",
    "diagram_matrix",
    "factorization_sign",
    "permutation_sign",
    "represent",
    "swap_matrix",
]
