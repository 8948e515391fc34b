"""
Circles of the packing and their exact geometry
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

from core.arithmetic import ZERO, ExactReal
from core.packing.labels import Label


@dataclass(frozen=True)
class Round:
    center_x: ExactReal
    center_y: ExactReal
    radius: ExactReal

    @property
    def center(self) -> tuple[ExactReal, ExactReal]:
        return self.center_x, self.center_y


@dataclass(frozen=True)
class HLine:
    height: ExactReal


Shape = Union[Round, HLine]


@dataclass(frozen=True)
class Circle:
    """A generalized circle of the packing.

    Circles tangent to the base line carry a label and sqrt_curv = a*alpha + b;
    circles off the line carry neither, only their curvature.
    """

    shape: Shape
    curv: ExactReal
    label: Optional[Label] = None
    sqrt_curv: Optional[ExactReal] = None
    generation: Optional[int] = None

    @property
    def is_line(self) -> bool:
        return isinstance(self.shape, HLine)

    @property
    def is_base_line(self) -> bool:
        return isinstance(self.shape, HLine) and self.shape.height.is_zero()

    @property
    def radius(self) -> Optional[ExactReal]:
        return self.shape.radius if isinstance(self.shape, Round) else None

    @property
    def center(self) -> Optional[tuple[ExactReal, ExactReal]]:
        return self.shape.center if isinstance(self.shape, Round) else None

    @property
    def abscissa(self) -> ExactReal:
        """Tangency abscissa on the base line"""
        if not isinstance(self.shape, Round):
            raise ValueError("a line has no tangency abscissa")
        return self.shape.center_x

    @property
    def line_height(self) -> Optional[ExactReal]:
        return self.shape.height if isinstance(self.shape, HLine) else None

    def curvature_center(self) -> tuple[ExactReal, ExactReal]:
        """curv * center for round circles; the outward unit normal for lines"""
        if isinstance(self.shape, HLine):
            return ZERO, ExactReal(-1 if self.shape.height.is_zero() else 1)
        return self.curv * self.shape.center_x, self.curv * self.shape.center_y

    def x_extent(self) -> Optional[tuple[ExactReal, ExactReal]]:
        if not isinstance(self.shape, Round):
            return None
        return self.shape.center_x - self.shape.radius, self.shape.center_x + self.shape.radius

    def with_generation(self, generation: Optional[int]) -> Circle:
        return replace(self, generation=generation)

    def __str__(self) -> str:
        name = f"C{self.label}" if self.label is not None else "C"
        if isinstance(self.shape, HLine):
            return f"{name} line y={self.shape.height}"
        return f"{name} center=({self.shape.center_x}, {self.shape.center_y}) r={self.shape.radius}"


BASE_LINE = Circle(HLine(ZERO), ZERO)


def line_circle(height: ExactReal, label: Optional[Label] = None, generation: Optional[int] = None) -> Circle:
    return Circle(HLine(height), ZERO, label, ZERO if label is not None else None, generation)


def round_circle(center_x: ExactReal, center_y: ExactReal, radius: ExactReal, label: Optional[Label] = None,
                 sqrt_curv: Optional[ExactReal] = None, generation: Optional[int] = None) -> Circle:
    return Circle(Round(center_x, center_y, radius), radius.inv(), label, sqrt_curv, generation)


def touching(c1: Circle, c2: Circle) -> bool:
    """Exact external tangency of two generalized circles"""
    if c1.is_line and c2.is_line:
        return False
    if c1.is_line or c2.is_line:
        line, disc = (c1, c2) if c1.is_line else (c2, c1)
        cy, r = disc.shape.center_y, disc.shape.radius
        return cy - r == line.shape.height or cy + r == line.shape.height
    dx = c1.shape.center_x - c2.shape.center_x
    dy = c1.shape.center_y - c2.shape.center_y
    total = c1.shape.radius + c2.shape.radius
    return dx * dx + dy * dy == total * total


def overlapping(c1: Circle, c2: Circle) -> bool:
    """True when the open interiors meet"""
    if c1.is_line and c2.is_line:
        return False
    if c1.is_line or c2.is_line:
        line, disc = (c1, c2) if c1.is_line else (c2, c1)
        cy, r = disc.shape.center_y, disc.shape.radius
        h = line.shape.height
        if h.is_zero():
            return cy - r < h
        return cy + r > h
    dx = c1.shape.center_x - c2.shape.center_x
    dy = c1.shape.center_y - c2.shape.center_y
    total = c1.shape.radius + c2.shape.radius
    return dx * dx + dy * dy < total * total
