from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import gcd, isqrt

from sympy import factorint
from sympy.ntheory.primetest import is_square

from core.errors import (
    DivisionByZero,
    IncompatibleRadicand,
    NotQuadratic,
    NotRational,
    PerfectSquareRadicand,
)

logger = logging.getLogger(__name__)


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@lru_cache(maxsize=4096)
def squarefree_split(d: int) -> tuple[int, int]:
    """Write d > 0 as s**2 * k with k squarefree; returns (s, k)"""
    if d <= 0:
        raise PerfectSquareRadicand(f"radicand must be positive, got {d}")
    if is_square(d):
        return isqrt(d), 1
    s, k = 1, 1
    for prime, exp in factorint(d).items():
        s *= prime ** (exp // 2)
        if exp % 2:
            k *= prime
    return s, k


def sign(x: int) -> int:
    return 1 if x > 0 else -1 if x < 0 else 0


def surd_sign(a: int, b: int, d: int) -> int:
    """Exact sign of a + b*sqrt(d) for squarefree d"""
    sa, sb = sign(a), sign(b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    return sa if a * a > b * b * d else sb


def surd_floor(a: int, b: int, d: int, r: int) -> int:
    """floor((a + b*sqrt(d)) / r) for r > 0"""
    if b == 0:
        return a // r
    root = isqrt(b * b * d)
    if b > 0:
        return (a + root) // r
    # b*sqrt(d) is irrational, so its floor sits one below -isqrt
    return (a - root - 1) // r


@dataclass(frozen=True)
class IntPoly2:
    """Primitive integer polynomial p*x**2 + q*x + r with discriminant D"""

    p: int
    q: int
    r: int
    D: int

    def evaluate(self, x: ExactReal) -> ExactReal:
        return x * x * self.p + x * self.q + self.r

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return self.p, self.q, self.r


@total_ordering
class ExactReal:
    """A rational or real quadratic number (p + q*sqrt(d)) / r in canonical form.

    Rationals are stored with q = 0 and d = 1. Values are immutable and
    canonical, so equality is structural.
    """

    __slots__ = ("_p", "_q", "_d", "_r")

    def __init__(self, p: int, q: int = 0, d: int = 1, r: int = 1) -> None:
        if r == 0:
            raise DivisionByZero("zero denominator")
        if q != 0:
            s, d = squarefree_split(d)
            q *= s
            if d == 1:
                p, q = p + q, 0
        if q == 0:
            d = 1
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        self._p = p // g
        self._q = q // g
        self._d = d
        self._r = r // g

    # Construction

    @classmethod
    def rational(cls, num: int, den: int = 1) -> ExactReal:
        return cls(num, 0, 1, den)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> ExactReal:
        value = Fraction(value)
        return cls(value.numerator, 0, 1, value.denominator)

    @classmethod
    def surd(cls, p: int, q: int, d: int, r: int = 1) -> ExactReal:
        return cls(p, q, d, r)

    @classmethod
    def sqrt(cls, d: int) -> ExactReal:
        return cls(0, 1, d, 1)

    @classmethod
    def coerce(cls, value: ExactReal | int | Fraction) -> ExactReal:
        if isinstance(value, ExactReal):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.from_fraction(value)
        raise TypeError(f"cannot convert {type(value).__name__} to ExactReal")

    # Fields

    @property
    def p(self) -> int:
        return self._p

    @property
    def q(self) -> int:
        return self._q

    @property
    def d(self) -> int:
        return self._d

    @property
    def r(self) -> int:
        return self._r

    @property
    def is_rational(self) -> bool:
        return self._q == 0

    @property
    def num(self) -> int:
        if not self.is_rational:
            raise NotRational(f"{self} is not rational")
        return self._p

    @property
    def den(self) -> int:
        if not self.is_rational:
            raise NotRational(f"{self} is not rational")
        return self._r

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def parts(self) -> tuple[int, int, int, int]:
        return self._p, self._q, self._d, self._r

    # Arithmetic

    def _common_radicand(self, other: ExactReal) -> int:
        if self.is_rational:
            return other._d
        if other.is_rational or other._d == self._d:
            return self._d
        raise IncompatibleRadicand(self._d, other._d)

    def __add__(self, other: ExactReal | int | Fraction) -> ExactReal:
        if not isinstance(other, (ExactReal, int, Fraction)):
            return NotImplemented
        other = ExactReal.coerce(other)
        d = self._common_radicand(other)
        return ExactReal(
            self._p * other._r + other._p * self._r,
            self._q * other._r + other._q * self._r,
            d,
            self._r * other._r,
        )

    def __radd__(self, other: int | Fraction) -> ExactReal:
        return self + other

    def __neg__(self) -> ExactReal:
        return ExactReal(-self._p, -self._q, self._d, self._r)

    def __pos__(self) -> ExactReal:
        return self

    def __sub__(self, other: ExactReal | int | Fraction) -> ExactReal:
        if not isinstance(other, (ExactReal, int, Fraction)):
            return NotImplemented
        return self + (-ExactReal.coerce(other))

    def __rsub__(self, other: int | Fraction) -> ExactReal:
        return ExactReal.coerce(other) - self

    def __mul__(self, other: ExactReal | int | Fraction) -> ExactReal:
        if not isinstance(other, (ExactReal, int, Fraction)):
            return NotImplemented
        other = ExactReal.coerce(other)
        d = self._common_radicand(other)
        return ExactReal(
            self._p * other._p + self._q * other._q * d,
            self._p * other._q + self._q * other._p,
            d,
            self._r * other._r,
        )

    def __rmul__(self, other: int | Fraction) -> ExactReal:
        return self * other

    def inv(self) -> ExactReal:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        norm = self._p * self._p - self._q * self._q * self._d
        return ExactReal(self._r * self._p, -self._r * self._q, self._d, norm)

    def __truediv__(self, other: ExactReal | int | Fraction) -> ExactReal:
        if not isinstance(other, (ExactReal, int, Fraction)):
            return NotImplemented
        other = ExactReal.coerce(other)
        self._common_radicand(other)
        return self * other.inv()

    def __rtruediv__(self, other: int | Fraction) -> ExactReal:
        return ExactReal.coerce(other) / self

    def __pow__(self, exponent: int) -> ExactReal:
        if exponent < 0:
            return self.inv() ** -exponent
        result = ExactReal(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __abs__(self) -> ExactReal:
        return -self if self.sign() < 0 else self

    # Order

    def sign(self) -> int:
        return surd_sign(self._p, self._q, self._d)

    def is_zero(self) -> bool:
        return self._p == 0 and self._q == 0

    def compare(self, other: ExactReal | int | Fraction) -> Ordering:
        return Ordering((self - ExactReal.coerce(other)).sign())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactReal.from_fraction(other)
        if not isinstance(other, ExactReal):
            return NotImplemented
        return self.parts() == other.parts()

    def __lt__(self, other: ExactReal | int | Fraction) -> bool:
        if not isinstance(other, (ExactReal, int, Fraction)):
            return NotImplemented
        return self.compare(other) is Ordering.LT

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self._p, self._r))
        return hash(self.parts())

    def __bool__(self) -> bool:
        return not self.is_zero()

    # Rounding and approximation

    def floor(self) -> int:
        return surd_floor(self._p, self._q, self._d, self._r)

    def __floor__(self) -> int:
        return self.floor()

    def __float__(self) -> float:
        if self.is_rational:
            return float(Fraction(self._p, self._r))
        # scale by 2**k until the integer part carries 60+ bits
        k = 64
        while True:
            n = surd_floor(self._p << k, self._q << k, self._d, self._r)
            if abs(n) >= 1 << 60:
                return float(Fraction(n, 1 << k))
            k += 64

    # Galois structure

    def conjugate(self) -> ExactReal:
        if self.is_rational:
            raise NotQuadratic(f"{self} is rational")
        return ExactReal(self._p, -self._q, self._d, self._r)

    def is_reduced(self) -> bool:
        """True when x > 1 and its conjugate lies in (-1, 0)"""
        c = self.conjugate()
        return self > 1 and -1 < c < 0

    def minimal_polynomial(self) -> IntPoly2:
        if self.is_rational:
            raise NotQuadratic(f"{self} is rational")
        p, q, d, r = self.parts()
        a, b, c = r * r, -2 * p * r, p * p - q * q * d
        g = gcd(gcd(a, b), c)
        a, b, c = a // g, b // g, c // g
        return IntPoly2(a, b, c, b * b - 4 * a * c)

    # Text

    def __str__(self) -> str:
        from core.arithmetic.parsing import format_exact

        return format_exact(self)

    def __repr__(self) -> str:
        return f"ExactReal('{self}')"


ZERO = ExactReal(0)
ONE = ExactReal(1)


def compare(x: ExactReal, y: ExactReal) -> Ordering:
    return x.compare(y)


def minimal_polynomial(x: ExactReal) -> IntPoly2:
    return x.minimal_polynomial()


def conjugate(x: ExactReal) -> ExactReal:
    return x.conjugate()


def is_reduced(x: ExactReal) -> bool:
    return x.is_reduced()
