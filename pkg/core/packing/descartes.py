"""
Descartes relations between four mutually tangent generalized circles
"""

from typing import Optional, Sequence

from core.arithmetic import ExactReal
from core.packing.circles import Circle, line_circle, round_circle


def descartes_check(k1: ExactReal, k2: ExactReal, k3: ExactReal, k4: ExactReal) -> bool:
    """2(w^2 + x^2 + y^2 + z^2) == (w + x + y + z)^2, exactly"""
    total = k1 + k2 + k3 + k4
    squares = k1 * k1 + k2 * k2 + k3 * k3 + k4 * k4
    return squares * 2 == total * total


def reflect(members: Sequence[Circle], opposite: Circle, generation: Optional[int] = None) -> Circle:
    """The other circle tangent to the three members, across from `opposite`.

    Curvatures and curvature-weighted centres both obey the linear rule
    k' = 2(k1 + k2 + k3) - k_opposite.
    """
    curv = sum((m.curv for m in members), ExactReal(0)) * 2 - opposite.curv
    kx = sum((m.curvature_center()[0] for m in members), ExactReal(0)) * 2 - opposite.curvature_center()[0]
    ky = sum((m.curvature_center()[1] for m in members), ExactReal(0)) * 2 - opposite.curvature_center()[1]
    if curv.is_zero():
        disc = next(m for m in members if not m.is_line)
        # a new line touches the round members on the side its normal points to
        if ky.sign() > 0:
            height = disc.shape.center_y + disc.shape.radius
        else:
            height = disc.shape.center_y - disc.shape.radius
        return line_circle(height, generation=generation)
    radius = curv.inv()
    return round_circle(kx * radius, ky * radius, radius, generation=generation)
