"""
Label calculus of the half-plane packing: coprime pairs (a, b) with sqrt(curvature) = a*alpha + b
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from core.arithmetic import ExactReal
from core.errors import NonPositiveInput, NotCoprime, UnnormalizedLabel


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class InversionSide(str, Enum):
    LEFT_OF_X = "left_of_x"
    RIGHT_OF_Y = "right_of_y"


class Tangency(str, Enum):
    NOT_TANGENT = "not_tangent"
    LEFT_OF = "tangent_left_of"
    RIGHT_OF = "tangent_right_of"


@dataclass(frozen=True, order=True)
class Label:
    a: int
    b: int

    def __post_init__(self) -> None:
        if gcd(self.a, self.b) != 1:
            raise NotCoprime(f"label ({self.a}, {self.b}) is not coprime")

    def __add__(self, other: Label) -> Label:
        return Label(self.a + other.a, self.b + other.b)

    def __sub__(self, other: Label) -> Label:
        return Label(self.a - other.a, self.b - other.b)

    def __neg__(self) -> Label:
        return Label(-self.a, -self.b)

    def det(self, other: Label) -> int:
        return self.a * other.b - self.b * other.a

    def sqrt_curv(self, alpha: ExactReal) -> ExactReal:
        return alpha * self.a + self.b

    def normalized(self, alpha: ExactReal) -> Label:
        """The sign of the pair admitted in the packing: a*alpha + b >= 0, and a > 0 on lines"""
        s = self.sqrt_curv(alpha).sign()
        if s < 0 or (s == 0 and self.a < 0):
            return -self
        return self

    def is_normalized(self, alpha: ExactReal) -> bool:
        return self.normalized(alpha) == self

    def as_list(self) -> list[int]:
        return [self.a, self.b]

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


X_LABEL = Label(1, 0)
Y_LABEL = Label(0, 1)


def label_tangency(l1: Label, l2: Label) -> Tangency:
    det = l1.det(l2)
    if det == 1:
        return Tangency.LEFT_OF
    if det == -1:
        return Tangency.RIGHT_OF
    return Tangency.NOT_TANGENT


def unique_bezout(a: int, b: int) -> tuple[int, int]:
    """The (u, v) with a*u - b*v = 1, 0 < u <= b and 0 <= v < a"""
    if a < 1 or b < 1:
        raise NonPositiveInput(f"unique_bezout needs positive integers, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise NotCoprime(f"({a}, {b}) is not coprime")
    u = pow(a, -1, b) if b > 1 else 1
    return u, (a * u - 1) // b


def parents(label: Label) -> tuple[Label, Label]:
    """Tangent pair (A, B), A left of B, whose bounded interstice the circle fills"""
    if label.a < 1 or label.b < 1:
        raise NonPositiveInput(f"parents are defined for a, b >= 1, got {label}")
    u, v = unique_bezout(label.a, label.b)
    return Label(label.a - v, label.b - u), Label(v, u)


def label_generation(label: Label) -> int:
    """Generation of a circle between X and Y, counted from {X, Y, L}"""
    if label.a < 0 or label.b < 0:
        raise NonPositiveInput(f"{label} is not between X and Y")
    generation = 0
    while label not in (X_LABEL, Y_LABEL):
        left, right = parents(label)
        # the younger parent has the larger coordinate sum
        label = left if left.a + left.b > right.a + right.b else right
        generation += 1
    return generation


def invert_label(label: Label, side: InversionSide) -> Label:
    """Label of the image under the inversion fixing X, Y and L.

    Labels between X and Y map to the requested side; labels outside map back
    between X and Y, so the map is an involution.
    """
    if label in (X_LABEL, Y_LABEL):
        return label
    if label.a >= 0 and label.b >= 0:
        if side is InversionSide.LEFT_OF_X:
            return Label(label.a, -label.b)
        return Label(-label.a, label.b)
    if label.a < 0 and label.b < 0:
        raise UnnormalizedLabel(f"{label} has no circle in the packing")
    return Label(abs(label.a), abs(label.b))
