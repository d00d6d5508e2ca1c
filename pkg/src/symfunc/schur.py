"""
Schur Polynomials

Module: src.symfunc.schur
Purpose: Semistandard tableaux, Schur polynomials and Schur-basis expansion
Status: Complete
Created: 2026-10-17

s_ν(x1..xn) is the sum over semistandard ν-tableaux with entries in 1..n of
x^(entry multiplicities). schur_expand inverts this: it strips off the
lexicographically largest monomial of each degree (always a partition for a
symmetric input, and dominance-maximal) until nothing is left.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple, Union

from src.exactmath.multipoly import MultiPoly
from src.exactmath.rational import format_rational
from src.utils.exceptions import DimensionMismatchError, NotSymmetricError
from src.young.partition import Partition

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def semistandard_tableaux(shape: Tuple[int, ...], n: int) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    """
    Every semistandard filling of `shape` with entries 1..n, as a tuple of
    rows. Rows weakly increase, columns strictly increase.
    """
    if len(shape) > n:
        return ()
    boxes = [(i, j) for i, part in enumerate(shape) for j in range(part)]
    filling: Dict[Tuple[int, int], int] = {}
    found: List[Tuple[Tuple[int, ...], ...]] = []

    def place(position: int) -> None:
        if position == len(boxes):
            found.append(tuple(tuple(filling[(i, j)] for j in range(part)) for i, part in enumerate(shape)))
            return
        i, j = boxes[position]
        low = 1
        if j > 0:
            low = max(low, filling[(i, j - 1)])
        if i > 0:
            low = max(low, filling[(i - 1, j)] + 1)
        # rows below still need strictly larger entries in this column
        high = n - (_column_height(shape, j) - 1 - i)
        for value in range(low, high + 1):
            filling[(i, j)] = value
            place(position + 1)
        filling.pop((i, j), None)

    place(0)
    return tuple(found)


def _column_height(shape: Tuple[int, ...], j: int) -> int:
    return sum(1 for part in shape if part > j)


@dataclass(frozen=True)
class SymmetricPolynomial:
    """A MultiPoly expected to be symmetric; `truncated` marks ℓ(ν) > n."""

    poly: MultiPoly
    truncated: bool = False

    @property
    def n(self) -> int:
        return self.poly.nvars

    def is_symmetric(self) -> bool:
        return self.poly.is_symmetric()

    def evaluate(self, point: Iterable[Union[int, Fraction]]) -> Fraction:
        return self.poly.evaluate(list(point))

    def __eq__(self, other) -> bool:
        if isinstance(other, SymmetricPolynomial):
            return self.poly == other.poly
        if isinstance(other, MultiPoly):
            return self.poly == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.poly)

    def __str__(self) -> str:
        return self.poly.to_string("t")


def schur(nu: Partition, n: int) -> SymmetricPolynomial:
    """
    Schur polynomial s_ν in n variables. For ℓ(ν) > n the result is the
    zero polynomial with `truncated` set.
    """
    if n < 1:
        raise ValueError(f"Need at least one variable, got n = {n}")
    if nu.length > n:
        logger.debug("s_%s in %d variables is zero", nu, n)
        return SymmetricPolynomial(MultiPoly.zero(n), truncated=True)
    terms: Dict[Tuple[int, ...], int] = {}
    for tableau in semistandard_tableaux(nu.parts, n):
        exps = [0] * n
        for row in tableau:
            for entry in row:
                exps[entry - 1] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + 1
    return SymmetricPolynomial(MultiPoly(n, terms))


def complete_homogeneous(l: int, n: int) -> SymmetricPolynomial:
    """h_l = s_(l)"""
    return schur(Partition((l,)) if l else Partition(), n)


def elementary(l: int, n: int) -> SymmetricPolynomial:
    """e_l = s_(1^l)"""
    return schur(Partition((1,) * l), n)


@dataclass
class SchurExpansion:
    """Σ coeff·s_ν in n variables; zero coefficients are never stored."""

    n: int
    terms: Dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for nu, coeff in self.terms.items():
            if nu.length > self.n:
                raise DimensionMismatchError(f"s_{nu} needs at most {self.n} rows")
            value = Fraction(coeff)
            if value:
                cleaned[nu] = value
        self.terms = cleaned

    def coefficient(self, nu: Partition) -> Fraction:
        return self.terms.get(nu, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> List[Tuple[Partition, Fraction]]:
        """By size, then reverse-lexicographic in the parts."""
        return sorted(self.terms.items(), key=lambda item: (-item[0].size, tuple(-p for p in item[0].parts)))

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if other.n != self.n:
            raise DimensionMismatchError(f"Expansions in {self.n} and {other.n} variables")
        combined = dict(self.terms)
        for nu, coeff in other.terms.items():
            combined[nu] = combined.get(nu, Fraction(0)) + coeff
        return SchurExpansion(self.n, combined)

    def scaled(self, factor: Union[int, Fraction]) -> "SchurExpansion":
        return SchurExpansion(self.n, {nu: c * factor for nu, c in self.terms.items()})

    def __mul__(self, factor: Union[int, Fraction]) -> "SchurExpansion":
        return self.scaled(factor)

    __rmul__ = __mul__

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + other.scaled(-1)

    def to_polynomial(self) -> SymmetricPolynomial:
        total = MultiPoly.zero(self.n)
        for nu, coeff in self.terms.items():
            total = total + schur(nu, self.n).poly * coeff
        return SymmetricPolynomial(total)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({format_rational(c)})*s[{nu}]" for nu, c in self.sorted_terms())


def _asymmetry_witness(poly: MultiPoly) -> Optional[Tuple[int, ...]]:
    for exps, coeff in poly.sorted_terms():
        for i in range(poly.nvars - 1):
            swapped = list(exps)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if poly.coefficient(swapped) != coeff:
                return exps
    return None


def schur_expand(p: Union[SymmetricPolynomial, MultiPoly]) -> SchurExpansion:
    """
    Expand a symmetric polynomial (homogeneous or not) in the Schur basis.

    Raises:
        NotSymmetricError: Naming a monomial whose variable swap is missing
    """
    poly = p.poly if isinstance(p, SymmetricPolynomial) else p
    witness = _asymmetry_witness(poly)
    if witness is not None:
        raise NotSymmetricError(f"Polynomial is not symmetric: monomial exponent {witness}")

    n = poly.nvars
    remainder = poly
    terms: Dict[Partition, Fraction] = {}
    while not remainder.is_zero():
        exps, coeff = remainder.sorted_terms()[0]
        if any(exps[i] < exps[i + 1] for i in range(n - 1)):
            raise NotSymmetricError(f"Leading monomial {exps} is not a partition")
        nu = Partition(tuple(e for e in exps if e))
        terms[nu] = coeff
        remainder = remainder - schur(nu, n).poly * coeff
    return SchurExpansion(n, terms)


__all__ = [
    "SchurExpansion",
    "SymmetricPolynomial",
    "complete_homogeneous",
    "elementary",
    "schur",
    "schur_expand",
    "semistandard_tableaux",
]
