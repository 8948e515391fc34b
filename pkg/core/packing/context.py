"""
The packing P_alpha: generators, closed-form geometry, interstice filling and inversion
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from core.arithmetic import ExactReal
from core.errors import LineOperand, NonPositiveInput, NotTangent, UnnormalizedLabel, WrongSide
from core.packing.circles import BASE_LINE, Circle, HLine, Round, line_circle, round_circle
from core.packing.labels import (
    X_LABEL,
    Y_LABEL,
    InversionSide,
    Label,
    Side,
    Tangency,
    invert_label,
    label_tangency,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PackingContext:
    alpha: ExactReal
    base: Circle
    x: Circle
    y: Circle

    @property
    def generators(self) -> tuple[Circle, Circle, Circle]:
        return self.base, self.x, self.y


def make_packing(alpha: ExactReal) -> PackingContext:
    if alpha.sign() <= 0:
        raise NonPositiveInput(f"the packing needs alpha > 0, got {alpha}")
    ctx = PackingContext(alpha, BASE_LINE.with_generation(0), BASE_LINE, BASE_LINE)
    return PackingContext(
        alpha,
        BASE_LINE.with_generation(0),
        circle_for_label(ctx, X_LABEL, generation=0),
        circle_for_label(ctx, Y_LABEL, generation=0),
    )


def sqrt_curvature(ctx: PackingContext, label: Label) -> ExactReal:
    s = label.sqrt_curv(ctx.alpha)
    if s.sign() < 0:
        raise UnnormalizedLabel(f"{label} has a*alpha + b < 0 for alpha = {ctx.alpha}")
    return s


def circle_for_label(ctx: PackingContext, label: Label, generation: Optional[int] = None) -> Circle:
    """Closed form: radius 1/s**2 and tangency abscissa 2b/(alpha*s) with s = a*alpha + b"""
    s = sqrt_curvature(ctx, label)
    if s.is_zero():
        if label.a < 0:
            raise UnnormalizedLabel(f"line label {label} must have a > 0")
        # circles touching both lines have sqrt_curv 1/a
        return line_circle(ExactReal(2 * label.a * label.a), label, generation)
    radius = (s * s).inv()
    t = ExactReal(2 * label.b) / (ctx.alpha * s)
    return round_circle(t, radius, radius, label, s, generation)


@dataclass(frozen=True)
class TangentPair:
    left: Circle
    right: Circle

    def __post_init__(self) -> None:
        if self.left.label is None or self.right.label is None:
            raise NotTangent("tangent pairs are formed from labelled circles")
        if self.left.label.det(self.right.label) != 1:
            raise NotTangent(f"{self.left.label} is not tangent on the left of {self.right.label}")

    @classmethod
    def of(cls, c1: Circle, c2: Circle) -> TangentPair:
        """Order two tangent labelled circles left to right"""
        if c1.label is None or c2.label is None:
            raise NotTangent("tangent pairs are formed from labelled circles")
        tangency = label_tangency(c1.label, c2.label)
        if tangency is Tangency.NOT_TANGENT:
            raise NotTangent(f"{c1.label} and {c2.label} are not tangent")
        return cls(c1, c2) if tangency is Tangency.LEFT_OF else cls(c2, c1)

    def _require_round(self) -> None:
        if self.left.is_line or self.right.is_line:
            raise LineOperand("interstice filling needs two round circles")

    @property
    def generation(self) -> Optional[int]:
        if self.left.generation is None or self.right.generation is None:
            return None
        return max(self.left.generation, self.right.generation)


def tangent(ctx: PackingContext, l1: Label, l2: Label) -> Tangency:
    return label_tangency(l1, l2)


def _next_generation(pair: TangentPair) -> Optional[int]:
    generation = pair.generation
    return None if generation is None else generation + 1


def fill_bounded(ctx: PackingContext, pair: TangentPair) -> Circle:
    """The circle in the bounded interstice of the pair and the base line"""
    pair._require_round()
    left, right = pair.left, pair.right
    s = left.sqrt_curv + right.sqrt_curv
    # sqrt(curvature)-weighted mediant of the parents' tangency points
    t = (left.sqrt_curv * left.abscissa + right.sqrt_curv * right.abscissa) / s
    radius = (s * s).inv()
    return round_circle(t, radius, radius, left.label + right.label, s, _next_generation(pair))


def fill_unbounded(ctx: PackingContext, pair: TangentPair, side: Optional[Side] = None) -> Circle:
    """The circle in the unbounded interstice; it lies beside the smaller of the two.

    The result is a line parallel to the base when both circles are equal.
    """
    pair._require_round()
    left, right = pair.left, pair.right
    generation = _next_generation(pair)
    diff = left.sqrt_curv - right.sqrt_curv
    if diff.is_zero():
        label = (left.label - right.label).normalized(ctx.alpha)
        return line_circle(left.radius * 2, label, generation)
    t = (left.sqrt_curv * left.abscissa - right.sqrt_curv * right.abscissa) / diff
    if diff.sign() > 0:
        label, s, resolved = left.label - right.label, diff, Side.LEFT
    else:
        label, s, resolved = right.label - left.label, -diff, Side.RIGHT
    if side is not None and side is not resolved:
        raise WrongSide(f"the unbounded fill of {left.label}, {right.label} lies on the {resolved.value}")
    radius = (s * s).inv()
    return round_circle(t, radius, radius, label, s, generation)


_ORIGIN_SIDE = {True: InversionSide.LEFT_OF_X, False: InversionSide.RIGHT_OF_Y}


def invert_circle(ctx: PackingContext, circle: Circle) -> Circle:
    """Image under inversion in the circle centred (1/alpha, 0) of radius 1/alpha.

    That circle is orthogonal to the base line and passes through the three
    tangency points of X, Y and L, so it maps the packing onto itself.
    """
    c = ctx.alpha.inv()
    power = c * c
    shape = circle.shape
    if isinstance(shape, HLine):
        if shape.height.is_zero():
            return circle
        radius = power / (shape.height * 2)
        image = round_circle(c, radius, radius)
        side_left = False
    else:
        dx = shape.center_x - c
        denominator = dx * dx + shape.center_y * shape.center_y - shape.radius * shape.radius
        if denominator.is_zero():
            # circle through the centre of inversion, tangent to the base there
            image = line_circle(power / (shape.radius * 2))
            side_left = False
        else:
            scale = power / denominator
            image = round_circle(c + dx * scale, shape.center_y * scale, shape.radius * abs(scale))
            side_left = image.shape.center_x.sign() < 0
    if circle.label is None:
        return image.with_generation(None)
    label = invert_label(circle.label, _ORIGIN_SIDE[side_left]).normalized(ctx.alpha)
    if image.is_line:
        return line_circle(image.shape.height, label)
    return Circle(image.shape, image.curv, label, label.sqrt_curv(ctx.alpha))
