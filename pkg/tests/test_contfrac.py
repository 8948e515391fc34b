import unittest
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from core.arithmetic import ExactReal, parse
from core.contfrac import (
    CfExpansion,
    Step,
    StripClass,
    apply_mat,
    canonical_class,
    cf_expand,
    cf_states,
    cf_value,
    convergent_matrix,
    convergents,
    eventually_equal,
    format_cf,
    is_odd_period,
    least_rotation,
    parse_cf,
    period_fixed_point,
    step_trace,
)
from core.errors import CfSyntaxError, IndexOutOfRange, NonPositiveInput


class TestExpansion(unittest.TestCase):

    def test_worked_rational(self):
        e = cf_expand(ExactReal.rational(7, 5))
        self.assertEqual(e, CfExpansion((1, 2, 2)))
        self.assertTrue(e.is_finite)
        self.assertEqual(len(e), 3)
        self.assertEqual(format_cf(e), "[1; 2, 2]")

    def test_classification_table(self):
        expected = {
            "(1+sqrt(5))/2": ((), (1,)),
            "1+sqrt(2)": ((), (2,)),
            "(3+sqrt(13))/2": ((), (3,)),
            "(1+sqrt(3))/2": ((), (1, 2)),
            "sqrt(2)": ((1,), (2,)),
            "sqrt(3)": ((1,), (1, 2)),
        }
        for text, (head, period) in expected.items():
            e = cf_expand(parse(text))
            self.assertEqual((e.head, e.period), (head, period), text)

    def test_purely_periodic_iff_reduced(self):
        for text in ["(1+sqrt(5))/2", "1+sqrt(2)", "(1+sqrt(3))/2", "sqrt(2)", "sqrt(3)", "(-1+sqrt(5))/2"]:
            alpha = parse(text)
            self.assertEqual(cf_expand(alpha).is_purely_periodic, alpha.is_reduced(), text)

    def test_terms(self):
        e = cf_expand(ExactReal.sqrt(2))
        self.assertEqual(e.term(0), 1)
        self.assertEqual(e.term(5), 2)
        with self.assertRaises(TypeError):
            len(e)

    def test_text_form(self):
        self.assertEqual(format_cf(cf_expand(parse("(1+sqrt(5))/2"))), "[(1)]")
        self.assertEqual(format_cf(cf_expand(ExactReal.sqrt(2))), "[1; (2)]")
        self.assertEqual(format_cf(cf_expand(ExactReal.sqrt(3))), "[1; (1, 2)]")
        self.assertEqual(format_cf(CfExpansion((4,))), "[4]")

    def test_non_positive(self):
        with self.assertRaises(NonPositiveInput):
            cf_expand(ExactReal(0))
        with self.assertRaises(NonPositiveInput):
            cf_expand(ExactReal(1, -1, 2))
        with self.assertRaises(NonPositiveInput):
            step_trace(ExactReal(-1), 5)


class TestSteps(unittest.TestCase):

    def test_worked_trace(self):
        self.assertEqual(step_trace(ExactReal.rational(7, 5), 24), "ABAABAAC")

    def test_states(self):
        states = [state for _, state in cf_states(ExactReal.rational(7, 5))]
        expected = ["7/5", "2/5", "5/2", "3/2", "1/2", "2", "1", "0"]
        self.assertEqual(states, [parse(text) for text in expected])

    def test_truncated_irrational(self):
        golden = parse("(1+sqrt(5))/2")
        self.assertEqual(step_trace(golden, 6), "ABABAB")
        self.assertEqual(step_trace(golden, 0), "")
        self.assertEqual(step_trace(parse("1+sqrt(2)"), 7), "AABAABA")

    def test_letters(self):
        letters = [letter for letter, _ in cf_states(ExactReal(2))]
        self.assertEqual(letters, [Step.A, Step.A, Step.C])


class TestConvergents(unittest.TestCase):

    def test_sqrt2(self):
        found = convergents(cf_expand(ExactReal.sqrt(2)), 4)
        self.assertEqual([(c.p, c.q) for c in found], [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29)])
        self.assertEqual([c.index for c in found], [0, 1, 2, 3, 4])

    def test_finite_range(self):
        e = cf_expand(ExactReal.rational(7, 5))
        self.assertEqual(convergents(e, 2)[-1].value, ExactReal.rational(7, 5).as_fraction())
        with self.assertRaises(IndexOutOfRange):
            convergents(e, 3)

    def test_best_approximation_bound(self):
        alpha = parse("(3+sqrt(13))/2")
        for c in convergents(cf_expand(alpha), 8):
            error = abs(alpha - ExactReal.rational(c.p, c.q))
            self.assertLess(error, ExactReal.rational(1, c.q * c.q))

    def test_convergent_matrix_sends_complete_quotient(self):
        e = cf_expand(ExactReal.sqrt(2))
        m = convergent_matrix(e, 2)
        self.assertEqual(m, (3, 1, 2, 1))
        self.assertEqual(apply_mat(m, parse("1+sqrt(2)")), ExactReal.sqrt(2))

    def test_values(self):
        self.assertEqual(period_fixed_point((1,)), parse("(1+sqrt(5))/2"))
        self.assertEqual(period_fixed_point((1, 2)), parse("(1+sqrt(3))/2"))
        self.assertEqual(cf_value(CfExpansion((1,), (2,))), ExactReal.sqrt(2))
        self.assertEqual(cf_value(CfExpansion((1, 2, 2))), ExactReal.rational(7, 5))


class TestNotation(unittest.TestCase):

    def test_parse_and_normalize(self):
        self.assertEqual(parse_cf("[1; 2, 2]"), CfExpansion((1, 2, 2)))
        self.assertEqual(parse_cf("[1; 2, 1, 1]"), CfExpansion((1, 2, 2)))
        self.assertEqual(parse_cf("[1; (2)]"), CfExpansion((1,), (2,)))
        self.assertEqual(parse_cf("[(1, 1)]"), CfExpansion((), (1,)))
        self.assertEqual(parse_cf("[1; 2, 2, (2)]"), CfExpansion((1,), (2,)))

    def test_format_parse_roundtrip(self):
        for text in ["[1; 2, 2]", "[(1)]", "[1; (1, 2)]", "[0; 3, (1, 4)]"]:
            self.assertEqual(format_cf(parse_cf(text)), text)

    def test_syntax_errors(self):
        for text in ["1; 2", "[1; x]", "[1; 0, 2]", "[]", "[1; ()]"]:
            with self.assertRaises(CfSyntaxError):
                parse_cf(text)


class TestClasses(unittest.TestCase):

    def test_rotation(self):
        self.assertEqual(least_rotation((2, 1)), (1, 2))
        self.assertEqual(least_rotation((3, 1, 2)), (1, 2, 3))

    def test_canonical_class(self):
        self.assertEqual(canonical_class(CfExpansion((1, 2, 2))), StripClass.STRIP)
        self.assertEqual(canonical_class(cf_expand(ExactReal.sqrt(3))), (1, 2))
        self.assertEqual(canonical_class(cf_expand(parse("1+sqrt(3)"))), (1, 2))

    def test_eventually_equal(self):
        self.assertTrue(eventually_equal(cf_expand(ExactReal.rational(7, 5)), cf_expand(ExactReal(1))))
        self.assertTrue(eventually_equal(cf_expand(ExactReal.sqrt(3)), cf_expand(parse("(1+sqrt(3))/2"))))
        self.assertFalse(eventually_equal(cf_expand(ExactReal.rational(7, 5)), cf_expand(ExactReal.sqrt(2))))
        self.assertFalse(eventually_equal(cf_expand(ExactReal.sqrt(2)), cf_expand(ExactReal.sqrt(3))))

    def test_odd_period(self):
        self.assertTrue(is_odd_period(cf_expand(parse("(1+sqrt(5))/2"))))
        self.assertFalse(is_odd_period(cf_expand(parse("(1+sqrt(3))/2"))))
        self.assertFalse(is_odd_period(CfExpansion((1, 2))))


@given(st.integers(min_value=1, max_value=1000), st.integers(min_value=1, max_value=1000))
def test_rational_roundtrip_and_trace_length(num, den):
    x = ExactReal.rational(num, den)
    e = cf_expand(x)
    assert cf_value(e) == x
    trace = step_trace(x, sum(e.head) + len(e.head) + 5)
    assert len(trace) == sum(e.head) + len(e.head)
    assert trace.endswith("C") and trace.count("C") == 1


radicands = st.sampled_from([2, 3, 5, 6, 7, 13])


@given(st.integers(-20, 20), st.integers(1, 6), radicands, st.integers(1, 9))
def test_quadratic_roundtrip(p, q, d, r):
    x = ExactReal(p, q, d, r)
    assume(x.sign() > 0)
    e = cf_expand(x)
    assert e.period is not None
    assert cf_value(e) == x
    assert canonical_class(cf_expand(x + 1)) == canonical_class(e)
    assert canonical_class(cf_expand(x.inv())) == canonical_class(e)


@pytest.mark.parametrize("text", ["(1+sqrt(5))/2", "sqrt(7)", "(5+sqrt(21))/2"])
def test_states_follow_floor(text):
    """The number of A's before each B is the next partial quotient"""
    e = cf_expand(parse(text))
    trace = step_trace(parse(text), 60)
    runs = [len(run) for run in trace.split("B")[:-1]]
    assert runs == [e.term(n) for n in range(len(runs))]


def _alternates(cs):
    for prev, cur in zip(cs, cs[1:]):
        assert cur.p * prev.q - prev.p * cur.q == (-1) ** (cur.index - 1)


@given(st.integers(min_value=1, max_value=1000), st.integers(min_value=1, max_value=1000))
def test_rational_convergent_determinants(num, den):
    e = cf_expand(ExactReal.rational(num, den))
    cs = convergents(e, len(e.head) - 1)
    _alternates(cs)
    assert cs[-1].value == Fraction(num, den)


@given(st.integers(-20, 20), st.integers(1, 6), radicands, st.integers(1, 9))
def test_quadratic_convergent_determinants(p, q, d, r):
    x = ExactReal(p, q, d, r)
    assume(x.sign() > 0)
    _alternates(convergents(cf_expand(x), 12))
