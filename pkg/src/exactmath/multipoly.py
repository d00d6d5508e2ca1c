"""
Multivariate Polynomials

Module: src.exactmath.multipoly
Purpose: Sparse multivariate polynomials with exact rational coefficients
Status: Complete
Created: 2026-10-17

A MultiPoly is a map from exponent vectors to nonzero Fractions. Values are
immutable once built; every operation returns a new polynomial. Terms are
printed in a canonical order (total degree descending, then exponent vector
lexicographically descending) so serialized output is stable across runs.
"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from src.exactmath.rational import format_rational
from src.utils.exceptions import DimensionMismatchError

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class MultiPoly:
    """Polynomial in a fixed number of variables over the rationals."""

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Scalar] = None):
        """
        Build a polynomial from an exponent -> coefficient map.

        Args:
            nvars: Number of variables (positive)
            terms: Exponent vectors of length nvars mapped to coefficients;
                zero coefficients are dropped, repeated keys are not possible

        Raises:
            ValueError: nvars < 1 or a negative exponent
            DimensionMismatchError: Exponent vector of the wrong length
        """
        if nvars < 1:
            raise ValueError(f"nvars must be positive, got {nvars}")
        self._nvars = nvars
        self._terms: Dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(exps)
            if len(key) != nvars:
                raise DimensionMismatchError(
                    f"Exponent {key} has length {len(key)}, expected {nvars}"
                )
            if any(e < 0 for e in key):
                raise ValueError(f"Negative exponent in {key}")
            value = Fraction(coeff)
            if value:
                self._terms[key] = value

    @classmethod
    def _trusted(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> "MultiPoly":
        poly = cls.__new__(cls)
        poly._nvars = nvars
        poly._terms = terms
        return poly

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MultiPoly":
        """The variable with 0-based position `index`."""
        if not 0 <= index < nvars:
            raise IndexError(f"Variable index {index} outside 0..{nvars - 1}")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Scalar = 1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): coeff})

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.sorted_terms())

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(exps) for exps in self._terms)

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def homogeneous_component(self, degree: int) -> "MultiPoly":
        return MultiPoly._trusted(
            self._nvars, {e: c for e, c in self._terms.items() if sum(e) == degree}
        )

    def degrees(self) -> List[int]:
        """Distinct total degrees present, descending."""
        return sorted({sum(e) for e in self._terms}, reverse=True)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other._nvars != self._nvars:
                raise DimensionMismatchError(
                    f"Polynomials in {self._nvars} and {other._nvars} variables"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self._nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            value = terms.get(exps, 0) + coeff
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
        return MultiPoly._trusted(self._nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._trusted(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self._nvars)
            return MultiPoly._trusted(self._nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return MultiPoly._trusted(self._nvars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "MultiPoly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("Polynomial divided by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = MultiPoly.constant(self._nvars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self._nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    # ------------------------------------------------------------------
    # Evaluation and variable manipulation
    # ------------------------------------------------------------------

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self._nvars:
            raise DimensionMismatchError(
                f"Point has {len(point)} coordinates, polynomial has {self._nvars} variables"
            )
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for value, e in zip(values, exps):
                if e:
                    term *= value ** e
            total += term
        return total

    def swap_variables(self, i: int, j: int) -> "MultiPoly":
        terms = {}
        for exps, coeff in self._terms.items():
            swapped = list(exps)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            terms[tuple(swapped)] = coeff
        return MultiPoly._trusted(self._nvars, terms)

    def is_symmetric(self) -> bool:
        """Invariant under every adjacent transposition of variables."""
        return all(self.swap_variables(i, i + 1) == self for i in range(self._nvars - 1))

    def halve_exponents(self) -> "MultiPoly":
        """
        Substitute t_i = y_i^2.

        Raises:
            ValueError: Naming the first monomial with an odd exponent
        """
        terms = {}
        for exps, coeff in self.sorted_terms():
            if any(e % 2 for e in exps):
                raise ValueError(f"Odd power in monomial {_monomial_text(exps, 'y')}")
            terms[tuple(e // 2 for e in exps)] = coeff
        return MultiPoly._trusted(self._nvars, terms)

    # ------------------------------------------------------------------
    # Text
    # ------------------------------------------------------------------

    def to_string(self, var: str = "y") -> str:
        """Sorted sum of "coeff*y1^a1*...*yn^an" terms ("0" when zero)."""
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            monomial = _monomial_text(exps, var)
            body = format_rational(coeff) if not monomial else f"{format_rational(coeff)}*{monomial}"
            parts.append(body)
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"MultiPoly({self._nvars}, {self.to_string()!r})"


def _monomial_text(exps: Iterable[int], var: str) -> str:
    factors = []
    for index, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"{var}{index}")
        elif e > 1:
            factors.append(f"{var}{index}^{e}")
    return "*".join(factors)


__all__ = ["MultiPoly", "Exponent"]
