"""
Double Schur Polynomials

Module: src.symfunc.double_schur
Purpose: Factorial Schur polynomials s_ν(x | a) and their closed values at a_ρ
Status: Complete
Created: 2026-10-17

s_ν(x | a) = Σ_T Π_{α ∈ ν} (x_{T(α)} - a_{T(α) + c(α)}), summed over
semistandard ν-tableaux T with entries in 1..n, where c(α) = j - i. The sum
is evaluated directly at a point; it never needs division.

The vanishing property: s_ν(a_ρ | a) = 0 unless ν ⊆ ρ.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence, Union

from src.exactmath.multipoly import MultiPoly
from src.symfunc.schur import semistandard_tableaux
from src.symfunc.sequences import ParameterSequence, a_rho
from src.utils.exceptions import DimensionMismatchError, ShapeBoundError
from src.young.partition import Partition

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class DoubleSchur:
    """s_ν(x | a) in n variables, evaluable at rational points."""

    nu: Partition
    n: int
    a: ParameterSequence

    def __call__(self, point: Sequence[Scalar]) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """
        Raises:
            DimensionMismatchError: len(point) != n
        """
        if len(point) != self.n:
            raise DimensionMismatchError(f"Point has {len(point)} coordinates, expected {self.n}")
        x = [Fraction(v) for v in point]
        total = Fraction(0)
        for tableau in semistandard_tableaux(self.nu.parts, self.n):
            term = Fraction(1)
            for i, row in enumerate(tableau):
                for j, entry in enumerate(row):
                    term *= x[entry - 1] - self.a(entry + j - i)
                    if not term:
                        break
                if not term:
                    break
            total += term
        return total

    def at_rho(self, rho: Partition) -> Fraction:
        """s_ν(a_ρ | a)"""
        return self.evaluate(a_rho(rho, self.n, self.a))

    def to_polynomial(self) -> MultiPoly:
        """Symbolic form in x1..xn (used to check symmetry)."""
        total = MultiPoly.zero(self.n)
        for tableau in semistandard_tableaux(self.nu.parts, self.n):
            term = MultiPoly.constant(self.n, 1)
            for i, row in enumerate(tableau):
                for j, entry in enumerate(row):
                    term = term * (MultiPoly.variable(entry - 1, self.n) - self.a(entry + j - i))
            total = total + term
        return total


def double_schur(nu: Partition, n: int, a: ParameterSequence) -> DoubleSchur:
    """
    Raises:
        ShapeBoundError: ℓ(ν) > n
    """
    if nu.length > n:
        raise ShapeBoundError(f"s_{nu}(x | a) needs ℓ(ν) <= n; got n = {n}")
    return DoubleSchur(nu, n, a)


def row_value(l: int, k: int, n: int, a: ParameterSequence) -> Fraction:
    """
    Closed form of s_(l)(a_(k) | a) for l <= k <= 2l:
    k!/(k-l)! · (M+k+l-3)!/(M+k-3)! with M = 2n + 2ε.
    """
    big = a.effective_rank(n)
    return Fraction(prod(range(k - l + 1, k + 1))) * prod(
        (big + k - 3 + t for t in range(1, l + 1)), start=Fraction(1)
    )


def column_value(l: int, k: int, n: int, a: ParameterSequence) -> Fraction:
    """
    Closed form of s_(1^l)(a_(1^k) | a) for l <= k <= 2l <= n:
    the product (a_{n-l+2} - a_{n-k+1}) ... (a_{n+1} - a_{n-k+1}),
    which is k!/(k-l)! · (M-k)!/(M-k-l)! with M = 2n + 2ε.
    """
    big = a.effective_rank(n)
    return prod(((k - t) * (big - k - t) for t in range(l)), start=Fraction(1))


def column_product(l: int, k: int, n: int, a: ParameterSequence) -> Fraction:
    """The product of differences of the sequence, taken literally."""
    base = a(n - k + 1)
    return prod((a(i) - base for i in range(n - l + 2, n + 2)), start=Fraction(1))


__all__ = ["DoubleSchur", "double_schur", "row_value", "column_value", "column_product"]
