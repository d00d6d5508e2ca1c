"""
Exact Rationals

Module: src.exactmath.rational
Purpose: Rational scalar type, parsing/formatting and checked arithmetic
Status: Complete
Created: 2026-10-17

Rationals are fractions.Fraction values: always in lowest terms with a
positive denominator, arbitrary precision, never rounded. This module adds
the "p/q" text format used in every JSON document and a dispatcher for the
four field operations.
"""

from fractions import Fraction
from typing import Callable, Dict, Union

Rational = Fraction

RationalLike = Union[int, Fraction, str]

_OPERATIONS: Dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "−": lambda a, b: a - b,
    "*": lambda a, b: a * b,
    "×": lambda a, b: a * b,
    "/": lambda a, b: a / b,
    "÷": lambda a, b: a / b,
}


def to_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int, Fraction or "p/q" string to a Fraction.

    Raises:
        ValueError: If a string is not a valid rational
        TypeError: For floats and other inexact inputs
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" or "p" (surrounding whitespace allowed).

    Raises:
        ValueError: Malformed text or zero denominator
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty rational")
    if "/" in stripped:
        num, _, den = stripped.partition("/")
        try:
            numerator, denominator = int(num), int(den)
        except ValueError:
            raise ValueError(f"Malformed rational: '{text}'") from None
        if denominator == 0:
            raise ValueError(f"Zero denominator in rational: '{text}'")
        return Fraction(numerator, denominator)
    try:
        return Fraction(int(stripped))
    except ValueError:
        raise ValueError(f"Malformed rational: '{text}'") from None


def format_rational(value: Union[int, Fraction]) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    """
    Apply one field operation exactly.

    Args:
        a: Left operand
        b: Right operand
        op: One of + - * / (the symbols − × ÷ are accepted as well)

    Returns:
        Exact result in lowest terms

    Raises:
        ZeroDivisionError: Division by zero
        ValueError: Unknown operation
    """
    if op not in _OPERATIONS:
        valid = ", ".join(sorted(set(_OPERATIONS)))
        raise ValueError(f"Unknown operation: '{op}'. Must be one of: {valid}")
    left, right = to_rational(a), to_rational(b)
    if op in ("/", "÷") and right == 0:
        raise ZeroDivisionError(f"Division of {format_rational(left)} by zero")
    return _OPERATIONS[op](left, right)


def is_half_integer(value: Fraction) -> bool:
    """True when 2*value is an integer."""
    return (2 * Fraction(value)).denominator == 1


__all__ = [
    "Rational",
    "RationalLike",
    "to_rational",
    "parse_rational",
    "format_rational",
    "rational_arith",
    "is_half_integer",
]
