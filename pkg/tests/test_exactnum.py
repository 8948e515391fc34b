import math
import unittest
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from core.arithmetic import ExactReal, Ordering, format_exact, parse, parse_positive
from core.errors import (
    DivisionByZero,
    IncompatibleRadicand,
    NonPositiveInput,
    NotQuadratic,
    NotRational,
    NumberSyntaxError,
    PerfectSquareRadicand,
)


class TestParsing(unittest.TestCase):

    def test_rational(self):
        self.assertEqual(parse("7/5"), ExactReal.rational(7, 5))
        self.assertEqual(parse("14/10").parts(), (7, 0, 1, 5))
        self.assertEqual(parse("-3"), ExactReal(-3))

    def test_surd_forms(self):
        self.assertEqual(parse("(1+sqrt(5))/2").parts(), (1, 1, 5, 2))
        self.assertEqual(parse("1 + 2*sqrt(3)"), ExactReal(1, 2, 3))
        self.assertEqual(parse("1+2sqrt(3)"), ExactReal(1, 2, 3))
        self.assertEqual(parse("-2*sqrt(3)"), ExactReal(0, -2, 3))
        self.assertEqual(parse("(3 - sqrt(13))/2").parts(), (3, -1, 13, 2))

    def test_canonical_radicand(self):
        self.assertEqual(parse("sqrt(8)").parts(), (0, 2, 2, 1))
        self.assertEqual(parse("sqrt(4)"), ExactReal(2))
        self.assertTrue(parse("sqrt(9)").is_rational)

    def test_format_shortest(self):
        self.assertEqual(format_exact(parse("(1+sqrt(5))/2")), "(1+sqrt(5))/2")
        self.assertEqual(format_exact(parse("7/5")), "7/5")
        self.assertEqual(format_exact(parse("1+2*sqrt(3)")), "1+2*sqrt(3)")
        self.assertEqual(format_exact(ExactReal(0, -2, 3)), "-2*sqrt(3)")
        self.assertEqual(format_exact(ExactReal(0, 1, 2)), "sqrt(2)")
        self.assertEqual(str(ExactReal(4)), "4")

    def test_format_parse_roundtrip(self):
        for text in ["(1+sqrt(5))/2", "1+sqrt(2)", "(3+sqrt(13))/2", "(1+sqrt(3))/2", "7/5", "sqrt(3)"]:
            value = parse(text)
            self.assertEqual(parse(format_exact(value)), value)

    def test_syntax_errors(self):
        for text in ["", "abc", "1+", "sqrt()", "(1+sqrt(5)/2", "1/0x"]:
            with self.assertRaises(NumberSyntaxError):
                parse(text)

    def test_bad_radicand(self):
        with self.assertRaises(PerfectSquareRadicand):
            parse("sqrt(-3)")
        with self.assertRaises(PerfectSquareRadicand):
            parse("sqrt(0)")

    def test_decimals_need_opt_in(self):
        with self.assertRaises(NumberSyntaxError):
            parse("1.5")
        self.assertEqual(parse("1.5", allow_decimal=True), ExactReal.rational(3, 2))
        self.assertEqual(parse("1.4142", allow_decimal=True, digits=1), ExactReal.rational(7, 5))

    def test_parse_positive(self):
        with self.assertRaises(NonPositiveInput):
            parse_positive("0")
        with self.assertRaises(NonPositiveInput):
            parse_positive("1-sqrt(2)")
        self.assertEqual(parse_positive("sqrt(2)"), ExactReal.sqrt(2))


class TestArithmetic(unittest.TestCase):

    def setUp(self):
        self.phi = parse("(1+sqrt(5))/2")
        self.root2 = ExactReal.sqrt(2)

    def test_golden_identities(self):
        self.assertEqual(self.phi * self.phi, self.phi + 1)
        self.assertEqual(self.phi.inv(), self.phi - 1)
        self.assertEqual(1 / self.phi, self.phi - 1)
        self.assertEqual(self.phi.conjugate(), parse("(1-sqrt(5))/2"))
        self.assertEqual(self.phi ** 3, self.phi * 2 + 1)
        self.assertEqual(self.phi ** -1, self.phi - 1)

    def test_mixed_operands(self):
        self.assertEqual(self.root2 * self.root2, 2)
        self.assertEqual(self.root2 + Fraction(1, 2), ExactReal(1, 2, 2, 2))
        self.assertEqual(3 - self.root2, ExactReal(3, -1, 2))

    def test_incompatible_radicands(self):
        with self.assertRaises(IncompatibleRadicand):
            self.root2 + ExactReal.sqrt(3)

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            ExactReal(1) / ExactReal(0)
        with self.assertRaises(DivisionByZero):
            ExactReal(0).inv()
        with self.assertRaises(ZeroDivisionError):
            ExactReal(1, 0, 1, 0)

    def test_ordering(self):
        self.assertLess(self.root2, Fraction(3, 2))
        self.assertGreater(self.root2, Fraction(7, 5))
        self.assertEqual(self.root2.compare(self.root2), Ordering.EQ)
        self.assertEqual(ExactReal(1).compare(self.phi), Ordering.LT)
        self.assertEqual(sorted([self.phi, ExactReal(1), self.root2]), [ExactReal(1), self.root2, self.phi])

    def test_floor(self):
        self.assertEqual(self.phi.floor(), 1)
        self.assertEqual((-self.root2).floor(), -2)
        self.assertEqual(math.floor(parse("(3+sqrt(13))/2")), 3)
        self.assertEqual(ExactReal.rational(-7, 5).floor(), -2)

    def test_float(self):
        self.assertTrue(math.isclose(float(self.phi), (1 + math.sqrt(5)) / 2, rel_tol=1e-15))
        # cancellation: (1 + sqrt 2)^-20 is tiny but exact
        tiny = (self.root2 + 1) ** -20
        self.assertTrue(math.isclose(float(tiny), (1 + math.sqrt(2)) ** -20, rel_tol=1e-12))

    def test_hash_consistent_with_fraction(self):
        self.assertEqual(hash(ExactReal.rational(1, 2)), hash(Fraction(1, 2)))
        self.assertEqual(ExactReal(3), 3)
        self.assertEqual(len({self.phi, parse("(2+2*sqrt(5))/4")}), 1)

    def test_rational_accessors(self):
        self.assertEqual(ExactReal.rational(6, 4).as_fraction(), Fraction(3, 2))
        with self.assertRaises(NotRational):
            _ = self.phi.num

    def test_minimal_polynomial(self):
        cases = {
            "(1+sqrt(5))/2": ((1, -1, -1), 5),
            "1+sqrt(2)": ((1, -2, -1), 8),
            "(3+sqrt(13))/2": ((1, -3, -1), 13),
            "(1+sqrt(3))/2": ((2, -2, -1), 12),
            "sqrt(2)": ((1, 0, -2), 8),
        }
        for text, (coefficients, D) in cases.items():
            poly = parse(text).minimal_polynomial()
            self.assertEqual(poly.coefficients, coefficients, text)
            self.assertEqual(poly.D, D, text)
            self.assertTrue(poly.evaluate(parse(text)).is_zero())
        with self.assertRaises(NotQuadratic):
            ExactReal(2).minimal_polynomial()

    def test_is_reduced(self):
        self.assertTrue(self.phi.is_reduced())
        self.assertTrue(parse("1+sqrt(2)").is_reduced())
        self.assertFalse(self.root2.is_reduced())
        self.assertFalse((self.phi - 1).is_reduced())


small = st.integers(min_value=-40, max_value=40)
denominators = st.integers(min_value=1, max_value=12)


@st.composite
def golden_field(draw):
    """Elements (p + q sqrt 5)/r of Q(sqrt 5)"""
    return ExactReal(draw(small), draw(small), 5, draw(denominators))


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_rational_arithmetic_matches_fraction(x, y):
    ex, ey = ExactReal.from_fraction(x), ExactReal.from_fraction(y)
    assert (ex + ey).as_fraction() == x + y
    assert (ex - ey).as_fraction() == x - y
    assert (ex * ey).as_fraction() == x * y
    assert (ex < ey) == (x < y)
    if y != 0:
        assert (ex / ey).as_fraction() == x / y


@given(golden_field(), golden_field())
def test_field_operations_invert(x, y):
    assert (x + y) - y == x
    if not y.is_zero():
        assert (x * y) / y == x
        assert y * y.inv() == 1


@given(golden_field())
def test_sign_agrees_with_float(x):
    p, q, d, r = x.parts()
    approx = (p + q * math.sqrt(d)) / r
    if abs(approx) > 1e-9:
        assert x.sign() == (1 if approx > 0 else -1)
    assert x.floor() <= float(x) < x.floor() + 1


@given(golden_field())
def test_canonical_form_is_structural(x):
    p, q, d, r = x.parts()
    assert r > 0
    assert math.gcd(math.gcd(p, q), r) == 1
    assert ExactReal(p * 3, q * 3, d, r * 3) == x


def test_float_of_rational_is_correctly_rounded():
    assert float(ExactReal.rational(1, 3)) == 1 / 3


@pytest.mark.parametrize("text", ["(1+sqrt(5))/2", "sqrt(2)", "(3+sqrt(13))/2"])
def test_conjugate_product_is_rational(text):
    x = parse(text)
    assert (x * x.conjugate()).is_rational
    assert (x + x.conjugate()).is_rational
