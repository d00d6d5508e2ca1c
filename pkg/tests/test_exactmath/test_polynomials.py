"""
Polynomial Tests

Module: tests.test_exactmath.test_polynomials
Purpose: MultiPoly arithmetic/evaluation and UniPoly division and roots
Status: Complete
Created: 2026-10-17
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from src.exactmath.multipoly import MultiPoly
from src.exactmath.unipoly import UniPoly
from src.utils.exceptions import DimensionMismatchError, SpectrumError

small = st.integers(min_value=-4, max_value=4)
points = st.lists(st.fractions(max_denominator=5).filter(lambda q: abs(q) < 20), min_size=2, max_size=2)


def _poly(terms):
    return MultiPoly(2, terms)


class TestMultiPolyConstruction:
    """Test construction and canonical form"""

    def test_zero_coefficients_dropped(self):
        """Test zero terms never appear"""
        p = _poly({(1, 0): 0, (0, 1): 2})
        assert len(p) == 1
        assert p.coefficient((1, 0)) == 0

    def test_wrong_exponent_length(self):
        """Test a 3-exponent key in a 2-variable polynomial"""
        with pytest.raises(DimensionMismatchError):
            _poly({(1, 0, 0): 1})

    def test_negative_exponent(self):
        """Test negative exponents are rejected"""
        with pytest.raises(ValueError):
            _poly({(-1, 0): 1})

    def test_degree_of_zero(self):
        """Test degree -1 for the zero polynomial"""
        assert MultiPoly.zero(3).degree == -1

    def test_string_form(self):
        """Test the canonical text form"""
        p = _poly({(2, 0): 1, (0, 0): Fraction(-1, 2)})
        assert str(p) == "1*y1^2 - 1/2"


class TestMultiPolyArithmetic:
    """Test ring operations against evaluation"""

    @given(small, small, small, points)
    def test_product_evaluates_to_product(self, a, b, c, point):
        """Test (pq)(x) = p(x) q(x)"""
        p = _poly({(1, 0): a, (0, 1): b, (0, 0): c})
        q = _poly({(2, 1): b, (0, 0): a})
        assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)

    @given(small, small, points)
    def test_sum_evaluates_to_sum(self, a, b, point):
        """Test (p + q)(x) = p(x) + q(x)"""
        p = _poly({(1, 1): a})
        q = _poly({(0, 3): b, (1, 1): 1})
        assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)

    def test_power(self):
        """Test (y1 + y2)^2"""
        y1, y2 = MultiPoly.variable(0, 2), MultiPoly.variable(1, 2)
        assert (y1 + y2) ** 2 == _poly({(2, 0): 1, (1, 1): 2, (0, 2): 1})

    def test_cancellation(self):
        """Test p - p is zero"""
        p = _poly({(3, 1): 7, (0, 0): 1})
        assert (p - p).is_zero()

    def test_division_by_zero(self):
        """Test scalar division by zero"""
        with pytest.raises(ZeroDivisionError):
            _poly({(1, 0): 1}) / 0

    def test_mismatched_variables(self):
        """Test adding polynomials in different numbers of variables"""
        with pytest.raises(DimensionMismatchError):
            MultiPoly.variable(0, 2) + MultiPoly.variable(0, 3)


class TestMultiPolySymmetry:
    """Test symmetry helpers"""

    def test_symmetric(self):
        """Test y1^2 + y2^2 is symmetric"""
        assert _poly({(2, 0): 1, (0, 2): 1}).is_symmetric()

    def test_not_symmetric(self):
        """Test y1 alone is not symmetric"""
        assert not MultiPoly.variable(0, 2).is_symmetric()

    def test_halve_exponents(self):
        """Test y1^2 y2^4 becomes t1 t2^2"""
        assert _poly({(2, 4): 3}).halve_exponents() == _poly({(1, 2): 3})

    def test_halve_odd_exponent(self):
        """Test odd powers are named in the error"""
        with pytest.raises(ValueError, match="y1"):
            _poly({(1, 2): 1}).halve_exponents()


class TestUniPoly:
    """Test univariate division, gcd and half-integer roots"""

    def test_divmod(self):
        """Test (u^2 - 1) = (u - 1)(u + 1)"""
        quotient, remainder = divmod(UniPoly([-1, 0, 1]), UniPoly.linear(1))
        assert quotient == UniPoly([1, 1])
        assert remainder.is_zero()

    def test_gcd_is_monic(self):
        """Test gcd((2u-2)(u+3), (u-1)(u-5)) = u - 1"""
        a = UniPoly([-2, 2]) * UniPoly.linear(-3)
        b = UniPoly.from_roots([1, 5])
        assert a.gcd(b) == UniPoly.linear(1)

    def test_lcm(self):
        """Test the lcm of overlapping root sets"""
        a = UniPoly.from_roots([1, 2])
        b = UniPoly.from_roots([2, 3])
        assert a.lcm(b) == UniPoly.from_roots([1, 2, 3])

    def test_half_integer_roots(self):
        """Test roots -5/2, 0, 3/2 with multiplicity"""
        p = UniPoly.from_roots([Fraction(3, 2), Fraction(-5, 2), 0, 0])
        assert p.half_integer_roots(3) == [Fraction(-5, 2), 0, 0, Fraction(3, 2)]

    def test_roots_outside_bound(self):
        """Test a root beyond the bound leaves a factor"""
        with pytest.raises(SpectrumError):
            UniPoly.from_roots([5]).half_integer_roots(2)

    def test_irrational_roots(self):
        """Test u^2 - 2 does not split"""
        with pytest.raises(SpectrumError, match="does not split"):
            UniPoly([-2, 0, 1]).half_integer_roots(4)

    def test_division_by_zero(self):
        """Test dividing by the zero polynomial"""
        with pytest.raises(ZeroDivisionError):
            divmod(UniPoly([1, 1]), UniPoly.zero())

    @given(st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=5))
    def test_from_roots_matches_sympy(self, twice_roots):
        """Test from_roots agrees with sympy's expansion"""
        roots = [Fraction(t, 2) for t in twice_roots]
        u = sympy.Symbol("u")
        expanded = sympy.Poly(sympy.prod([u - sympy.Rational(r.numerator, r.denominator) for r in roots]), u)
        expected = [Fraction(str(c)) for c in reversed(expanded.all_coeffs())]
        assert list(UniPoly.from_roots(roots).coeffs) == expected
