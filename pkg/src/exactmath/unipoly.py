"""
Univariate Polynomials

Module: src.exactmath.unipoly
Purpose: Dense univariate polynomials over the rationals (minimal polynomials)
Status: Complete
Created: 2026-10-17

Coefficients are stored lowest degree first with the leading coefficient
nonzero. Root finding is restricted to half-integers, which is all the
Jucys-Murphy spectra ever need.
"""

import logging
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from src.exactmath.rational import format_rational
from src.utils.exceptions import SpectrumError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class UniPoly:
    """Polynomial in one variable u with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls([1])

    @classmethod
    def linear(cls, root: Scalar) -> "UniPoly":
        """u - root"""
        return cls([-Fraction(root), 1])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "UniPoly":
        result = cls.one()
        for root in roots:
            result = result * cls.linear(root)
        return result

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def monic(self) -> "UniPoly":
        if not self._coeffs:
            return self
        lead = self.leading
        return UniPoly(c / lead for c in self._coeffs)

    def __call__(self, value: Scalar) -> Fraction:
        result = Fraction(0)
        for coeff in reversed(self._coeffs):
            result = result * value + coeff
        return result

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (Fraction(0),) * (size - len(self._coeffs))
        b = other._coeffs + (Fraction(0),) * (size - len(other._coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._coeffs or not other._coeffs:
            return UniPoly()
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    product[i + j] += a * b
        return UniPoly(product)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if not other._coeffs:
            raise ZeroDivisionError("Polynomial division by zero")
        remainder = list(self._coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - other.degree, 1)
        lead = other.leading
        while len(remainder) - 1 >= other.degree and any(remainder):
            shift = len(remainder) - 1 - other.degree
            factor = remainder[-1] / lead
            quotient[shift] = factor
            for k, c in enumerate(other._coeffs):
                remainder[shift + k] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return UniPoly(quotient), UniPoly(remainder)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: "UniPoly") -> "UniPoly":
        if not self or not other:
            return UniPoly()
        return ((self * other) // self.gcd(other)).monic()

    # ------------------------------------------------------------------
    # Roots
    # ------------------------------------------------------------------

    def half_integer_roots(self, bound: Scalar) -> List[Fraction]:
        """
        All roots, with multiplicity and ascending, assuming every root c
        satisfies 2c in Z and |c| <= bound.

        Raises:
            SpectrumError: If a factor of positive degree is left over
        """
        if not self._coeffs:
            raise SpectrumError("The zero polynomial has no finite root set")
        remaining = self
        roots: List[Fraction] = []
        limit = int(2 * Fraction(bound))
        for twice in range(-limit, limit + 1):
            candidate = Fraction(twice, 2)
            while remaining.degree > 0 and remaining(candidate) == 0:
                remaining = remaining // UniPoly.linear(candidate)
                roots.append(candidate)
        if remaining.degree > 0:
            raise SpectrumError(
                f"Polynomial {self} does not split over half-integers in [-{bound}, {bound}]; "
                f"leftover factor {remaining}"
            )
        logger.debug("Roots of %s: %s", self, [format_rational(r) for r in roots])
        return roots

    # ------------------------------------------------------------------
    # Text
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: List[str] = []
        for power in range(self.degree, -1, -1):
            coeff = self._coeffs[power]
            if not coeff:
                continue
            magnitude = abs(coeff)
            if power == 0:
                body = format_rational(magnitude)
            else:
                var = "u" if power == 1 else f"u^{power}"
                body = var if magnitude == 1 else f"{format_rational(magnitude)}*{var}"
            sign = "-" if coeff < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


__all__ = ["UniPoly"]
