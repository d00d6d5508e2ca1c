"""
Generators and Jucys-Murphy Elements

Module: src.brauer.generators
Purpose: s_ab, ε_ab and the Jucys-Murphy elements of B_m(ω) and C[S_m]
Status: Complete
Created: 2026-10-17

x_b = (ω-1)/2 + Σ_{a<b} (s_ab - ε_ab) in B_m(ω), and x_b = Σ_{a<b} s_ab in
the group algebra of the symmetric group. The x_b pairwise commute.
"""

from fractions import Fraction
from typing import Union

from src.brauer.diagram import BrauerDiagram
from src.brauer.element import BrauerElement
from src.utils.exceptions import IndexRangeError

Scalar = Union[int, Fraction]

GENERATOR_KINDS = ("s", "eps")


def _check_pair(a: int, b: int, m: int) -> None:
    if not 1 <= a < b <= m:
        raise IndexRangeError(f"Generator indices need 1 <= a < b <= m; got a={a}, b={b}, m={m}")


def transposition(a: int, b: int, m: int) -> BrauerDiagram:
    """s_ab: top a to bottom b', top b to bottom a', all else vertical."""
    _check_pair(a, b, m)
    images = list(range(1, m + 1))
    images[a - 1], images[b - 1] = b, a
    return BrauerDiagram.from_permutation(images)


def contraction(a: int, b: int, m: int) -> BrauerDiagram:
    """ε_ab: top arc a-b, bottom arc a'-b', all else vertical."""
    _check_pair(a, b, m)
    edges = [(a - 1, b - 1), (m + a - 1, m + b - 1)]
    edges += [(c - 1, m + c - 1) for c in range(1, m + 1) if c not in (a, b)]
    return BrauerDiagram(m, tuple(edges))


def generator(kind: str, a: int, b: int, m: int) -> BrauerDiagram:
    """
    Args:
        kind: "s" (also "sigma") or "eps" (also "e", "epsilon", "ε")

    Raises:
        ValueError: Unknown kind
        IndexRangeError: Not 1 <= a < b <= m
    """
    name = kind.strip().lower()
    if name in ("s", "sigma"):
        return transposition(a, b, m)
    if name in ("eps", "e", "epsilon", "ε"):
        return contraction(a, b, m)
    raise ValueError(f"Unknown generator kind: '{kind}'. Must be one of: {', '.join(GENERATOR_KINDS)}")


def s(a: int, m: int, omega: Scalar) -> BrauerElement:
    """s_a = s_{a,a+1} as an element"""
    return BrauerElement.from_diagram(transposition(a, a + 1, m), omega)


def eps(a: int, m: int, omega: Scalar) -> BrauerElement:
    """ε_a = ε_{a,a+1} as an element"""
    return BrauerElement.from_diagram(contraction(a, a + 1, m), omega)


def jm_element(b: int, m: int, omega: Scalar) -> BrauerElement:
    """
    Raises:
        IndexRangeError: b outside 1..m
    """
    if not 1 <= b <= m:
        raise IndexRangeError(f"Jucys-Murphy index {b} outside 1..{m}")
    omega = Fraction(omega)
    terms = {BrauerDiagram.identity(m): (omega - 1) / 2}
    for a in range(1, b):
        terms[transposition(a, b, m)] = Fraction(1)
        terms[contraction(a, b, m)] = Fraction(-1)
    return BrauerElement(m, omega, terms)


def symmetric_jm_element(b: int, m: int, omega: Scalar = 1) -> BrauerElement:
    """
    x_b = s_1b + ... + s_{b-1,b}; ω only matters if the result is later
    multiplied with ε-type elements.
    """
    if not 1 <= b <= m:
        raise IndexRangeError(f"Jucys-Murphy index {b} outside 1..{m}")
    return BrauerElement(m, omega, {transposition(a, b, m): Fraction(1) for a in range(1, b)})


__all__ = [
    "GENERATOR_KINDS",
    "contraction",
    "eps",
    "generator",
    "jm_element",
    "s",
    "symmetric_jm_element",
    "transposition",
]
