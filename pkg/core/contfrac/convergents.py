from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from core.arithmetic import ExactReal
from core.contfrac.expansion import CfExpansion
from core.errors import IndexOutOfRange

# (a, b, c, d) acting as t -> (a*t + b) / (c*t + d)
Mat = tuple[int, int, int, int]

IDENTITY: Mat = (1, 0, 0, 1)


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    index: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


def convergents(e: CfExpansion, n: int) -> list[Convergent]:
    """First n+1 convergents p_k/q_k, seeded with p_-1=1, q_-1=0, p_-2=0, q_-2=1"""
    if n < 0 or (e.is_finite and n >= len(e.head)):
        raise IndexOutOfRange(f"convergent {n} is out of range for {e}")
    result = []
    p_prev2, q_prev2, p_prev, q_prev = 0, 1, 1, 0
    for k, a in zip(range(n + 1), e.terms()):
        p, q = p_prev2 + a * p_prev, q_prev2 + a * q_prev
        result.append(Convergent(p, q, k))
        p_prev2, q_prev2, p_prev, q_prev = p_prev, q_prev, p, q
    return result


def _mul(m: Mat, n: Mat) -> Mat:
    a, b, c, d = m
    e, f, g, h = n
    return a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h


def terms_matrix(terms) -> Mat:
    """Product of [[a, 1], [1, 0]] over the terms"""
    m = IDENTITY
    for a in terms:
        m = _mul(m, (a, 1, 1, 0))
    return m


def convergent_matrix(e: CfExpansion, n: int) -> Mat:
    """[[p_{n-1}, p_{n-2}], [q_{n-1}, q_{n-2}]], sending the n-th complete quotient to alpha"""
    if n < 0:
        raise IndexOutOfRange(f"convergent matrix {n} is out of range")
    if e.is_finite and n > len(e.head):
        raise IndexOutOfRange(f"convergent matrix {n} is out of range for {e}")
    terms = e.terms()
    return terms_matrix(next(terms) for _ in range(n))


def apply_mat(m: Mat, t: ExactReal) -> ExactReal:
    a, b, c, d = m
    return (t * a + b) / (t * c + d)


def period_fixed_point(period: tuple[int, ...]) -> ExactReal:
    """The value t > 1 with t = [period, t]"""
    a, b, c, d = terms_matrix(period)
    # c t^2 + (d - a) t - b = 0 with c > 0; the larger root is the one above 1
    disc = (d - a) ** 2 + 4 * b * c
    return ExactReal(a - d, 1, disc, 2 * c)


def cf_value(e: CfExpansion) -> ExactReal:
    """Exact value of a finite or periodic expansion"""
    if e.period is None:
        value = Fraction(e.head[-1])
        for a in reversed(e.head[:-1]):
            value = a + 1 / value
        return ExactReal.from_fraction(value)
    return apply_mat(terms_matrix(e.head), period_fixed_point(e.period))
