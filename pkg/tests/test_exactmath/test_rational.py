"""
Rational Arithmetic Tests

Module: tests.test_exactmath.test_rational
Purpose: Parsing, formatting and the checked field operations
Status: Complete
Created: 2026-10-17
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.exactmath.rational import (
    format_rational,
    is_half_integer,
    parse_rational,
    rational_arith,
    to_rational,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)


class TestParsing:
    """Test the "p/q" text format"""

    def test_integer_text(self):
        """Test a bare integer parses to a Fraction"""
        assert parse_rational("7") == Fraction(7)

    def test_reduces_to_lowest_terms(self):
        """Test 6/4 becomes 3/2"""
        value = parse_rational("6/4")
        assert (value.numerator, value.denominator) == (3, 2)

    def test_negative_denominator_normalized(self):
        """Test the sign moves to the numerator"""
        assert format_rational(parse_rational("1/-3")) == "-1/3"

    def test_whitespace_allowed(self):
        """Test surrounding whitespace is ignored"""
        assert parse_rational("  -5/10 ") == Fraction(-1, 2)

    @pytest.mark.parametrize("text", ["", "1/", "a/2", "1.5", "1/2/3"])
    def test_malformed(self, text):
        """Test malformed text raises ValueError"""
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_zero_denominator(self):
        """Test a zero denominator is a ValueError, not a ZeroDivisionError"""
        with pytest.raises(ValueError, match="Zero denominator"):
            parse_rational("3/0")

    def test_float_rejected(self):
        """Test floats cannot sneak in"""
        with pytest.raises(TypeError):
            to_rational(0.5)

    def test_bool_rejected(self):
        """Test booleans are not treated as integers"""
        with pytest.raises(TypeError):
            to_rational(True)


class TestFormatting:
    """Test format_rational"""

    def test_integer_form(self):
        """Test denominators of 1 are dropped"""
        assert format_rational(Fraction(4, 2)) == "2"

    def test_fraction_form(self):
        """Test p/q output"""
        assert format_rational(Fraction(-1, 30)) == "-1/30"

    @given(rationals)
    def test_parse_inverts_format(self, value):
        """Test parse(format(q)) == q"""
        assert parse_rational(format_rational(value)) == value


class TestArithmetic:
    """Test rational_arith and the field axioms"""

    def test_sum(self):
        """Test 1/2 + 1/3 = 5/6"""
        assert rational_arith("1/2", "1/3", "+") == Fraction(5, 6)

    def test_division_by_zero(self):
        """Test division by zero raises ZeroDivisionError"""
        with pytest.raises(ZeroDivisionError):
            rational_arith(1, 0, "/")

    def test_unknown_operation(self):
        """Test an unknown operator lists the valid ones"""
        with pytest.raises(ValueError, match="Must be one of"):
            rational_arith(1, 2, "^")

    def test_unicode_operators(self):
        """Test − × ÷ are accepted"""
        assert rational_arith(3, 2, "×") == 6
        assert rational_arith(3, 2, "÷") == Fraction(3, 2)
        assert rational_arith(3, 2, "−") == 1

    @given(rationals, rationals, rationals)
    def test_distributive(self, a, b, c):
        """Test a(b + c) = ab + ac"""
        left = rational_arith(a, rational_arith(b, c, "+"), "*")
        right = rational_arith(rational_arith(a, b, "*"), rational_arith(a, c, "*"), "+")
        assert left == right

    @given(rationals.filter(bool))
    def test_multiplicative_inverse(self, a):
        """Test a * (1/a) = 1"""
        assert rational_arith(a, rational_arith(1, a, "/"), "*") == 1

    @given(rationals, rationals)
    def test_subtraction_inverts_addition(self, a, b):
        """Test (a + b) - b = a"""
        assert rational_arith(rational_arith(a, b, "+"), b, "-") == a


class TestHalfInteger:
    """Test is_half_integer"""

    @pytest.mark.parametrize("value,expected", [
        (Fraction(5, 2), True),
        (Fraction(-3), True),
        (Fraction(1, 3), False),
        (Fraction(7, 4), False),
    ])
    def test_values(self, value, expected):
        """Test several values"""
        assert is_half_integer(value) is expected
