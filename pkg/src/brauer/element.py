"""
Brauer Algebra Elements

Module: src.brauer.element
Purpose: Linear combinations of m-diagrams in B_m(ω) with ω specialized
Status: Complete
Created: 2026-10-17

ω is a concrete Fraction fixed when an element is built. Identities that
hold for generic ω are checked at several distinct values instead.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, Tuple, Union

from src.brauer.diagram import BrauerDiagram
from src.exactmath.rational import format_rational
from src.utils.exceptions import DimensionMismatchError, OmegaMismatchError

Scalar = Union[int, Fraction]


@dataclass
class BrauerElement:
    """Σ coeff·d over m-diagrams d; zero coefficients are never stored."""

    m: int
    omega: Fraction
    terms: Dict[BrauerDiagram, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.omega = Fraction(self.omega)
        cleaned: Dict[BrauerDiagram, Fraction] = {}
        for diagram, coeff in self.terms.items():
            if diagram.m != self.m:
                raise DimensionMismatchError(f"{diagram.m}-diagram {diagram} in an element of B_{self.m}")
            value = Fraction(coeff)
            if value:
                cleaned[diagram] = value
        self.terms = cleaned

    @classmethod
    def identity(cls, m: int, omega: Scalar) -> "BrauerElement":
        return cls(m, omega, {BrauerDiagram.identity(m): Fraction(1)})

    @classmethod
    def zero(cls, m: int, omega: Scalar) -> "BrauerElement":
        return cls(m, omega)

    @classmethod
    def from_diagram(cls, diagram: BrauerDiagram, omega: Scalar, coeff: Scalar = 1) -> "BrauerElement":
        return cls(diagram.m, omega, {diagram: coeff})

    def __iter__(self) -> Iterator[Tuple[BrauerDiagram, Fraction]]:
        return iter(sorted(self.terms.items()))

    def coefficient(self, diagram: BrauerDiagram) -> Fraction:
        return self.terms.get(diagram, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def in_symmetric_span(self) -> bool:
        """True when every diagram is a permutation (no ε-type arcs)."""
        return all(d.is_permutation() for d in self.terms)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check(self, other: "BrauerElement") -> None:
        if other.m != self.m:
            raise DimensionMismatchError(f"Elements of B_{self.m} and B_{other.m}")
        if other.omega != self.omega:
            raise OmegaMismatchError(
                f"Elements at ω = {format_rational(self.omega)} and ω = {format_rational(other.omega)}"
            )

    def __add__(self, other: "BrauerElement") -> "BrauerElement":
        if isinstance(other, (int, Fraction)):
            other = BrauerElement.identity(self.m, self.omega) * other
        self._check(other)
        combined = dict(self.terms)
        for diagram, coeff in other.terms.items():
            combined[diagram] = combined.get(diagram, Fraction(0)) + coeff
        return BrauerElement(self.m, self.omega, combined)

    __radd__ = __add__

    def __neg__(self) -> "BrauerElement":
        return self * -1

    def __sub__(self, other: "BrauerElement") -> "BrauerElement":
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "BrauerElement":
        return (-self) + other

    def __mul__(self, other: Union["BrauerElement", Scalar]) -> "BrauerElement":
        if isinstance(other, (int, Fraction)):
            return BrauerElement(self.m, self.omega, {d: c * other for d, c in self.terms.items()})
        self._check(other)
        product: Dict[BrauerDiagram, Fraction] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                loops, diagram = d1.compose(d2)
                product[diagram] = product.get(diagram, Fraction(0)) + c1 * c2 * self.omega ** loops
        return BrauerElement(self.m, self.omega, product)

    def __rmul__(self, other: Scalar) -> "BrauerElement":
        return self * other

    def __pow__(self, exponent: int) -> "BrauerElement":
        result = BrauerElement.identity(self.m, self.omega)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BrauerElement):
            return NotImplemented
        return self.m == other.m and self.omega == other.omega and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({format_rational(c)})[{d}]" for d, c in self)


def commutator(a: BrauerElement, b: BrauerElement) -> BrauerElement:
    """ab - ba"""
    return a * b - b * a


def diagram_multiply(d1: BrauerDiagram, d2: BrauerDiagram, omega: Scalar) -> BrauerElement:
    """ω^s·d where d1 placed above d2 closes s loops and leaves d."""
    loops, diagram = d1.compose(d2)
    omega = Fraction(omega)
    return BrauerElement.from_diagram(diagram, omega, omega ** loops)


__all__ = ["BrauerElement", "commutator", "diagram_multiply"]
