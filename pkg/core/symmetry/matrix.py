from __future__ import annotations

from dataclasses import dataclass

from core.arithmetic import ExactReal
from core.errors import NotUnimodular, PoleInput


@dataclass(frozen=True)
class Matrix2:
    """Element of PGL2(Z): integer matrix of determinant +-1, modulo sign.

    The stored representative has its first nonzero entry positive.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c not in (1, -1):
            raise NotUnimodular(f"[[{self.a}, {self.b}], [{self.c}, {self.d}]] has determinant "
                                f"{self.a * self.d - self.b * self.c}")
        first = next(e for e in (self.a, self.b, self.c, self.d) if e != 0)
        if first < 0:
            for name in ("a", "b", "c", "d"):
                object.__setattr__(self, name, -getattr(self, name))

    @classmethod
    def identity(cls) -> Matrix2:
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def as_lists(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, other: Matrix2) -> Matrix2:
        """Composition: (self @ other)(x) == self(other(x))"""
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> Matrix2:
        return Matrix2(self.d, -self.b, -self.c, self.a)

    def __pow__(self, exponent: int) -> Matrix2:
        if exponent < 0:
            return self.inverse() ** -exponent
        result, base = Matrix2.identity(), self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def __call__(self, x: ExactReal) -> ExactReal:
        return apply_moebius(self, x)

    def size_key(self) -> tuple:
        """Order used to pick small witnesses: max entry, entry sum, then det +1 first"""
        entries = (self.a, self.b, self.c, self.d)
        return max(map(abs, entries)), sum(map(abs, entries)), self.det != 1, entries

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def apply_moebius(m: Matrix2, x: ExactReal) -> ExactReal:
    """(a*x + b) / (c*x + d), exactly"""
    denominator = x * m.c + m.d
    if denominator.is_zero():
        raise PoleInput(f"{m} has a pole at {x}")
    return (x * m.a + m.b) / denominator
