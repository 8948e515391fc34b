"""
Pell equations x^2 - D*y^2 = +-4 and the homomorphism onto the stabilizer of alpha
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from sympy.ntheory.primetest import is_square

from core.arithmetic import ExactReal, IntPoly2
from core.contfrac import cf_expand, terms_matrix
from core.errors import BadDiscriminant, ParityViolation
from core.symmetry.matrix import Matrix2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    rhs: int

    def satisfies(self, D: int) -> bool:
        return self.x * self.x - D * self.y * self.y == self.rhs

    def as_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "rhs": self.rhs}


def check_discriminant(D: int) -> None:
    if D <= 0 or D % 4 in (2, 3) or is_square(D):
        raise BadDiscriminant(f"{D} is not the discriminant of a real quadratic order")


def order_generator(D: int) -> ExactReal:
    """omega with Z[omega] the order of discriminant D"""
    if D % 4 == 0:
        return ExactReal(0, 1, D, 2)
    return ExactReal(1, 1, D, 2)


def pell_compose(s1: PellSolution, s2: PellSolution, D: int) -> PellSolution:
    """Product of the units (x + y*sqrt(D))/2"""
    return PellSolution(
        (s1.x * s2.x + D * s1.y * s2.y) // 2,
        (s1.x * s2.y + s2.x * s1.y) // 2,
        s1.rhs * s2.rhs // 4,
    )


def pell_fundamental(D: int) -> tuple[Optional[PellSolution], PellSolution]:
    """Fundamental solutions of x^2 - D*y^2 = -4 (None if unsolvable) and = +4.

    The period of omega's continued fraction gives the fundamental unit of the
    order; its norm is -1 exactly when the period is odd.
    """
    check_discriminant(D)
    e = cf_expand(order_generator(D))
    head = Matrix2(*terms_matrix(e.head))
    period = Matrix2(*terms_matrix(e.period))
    stabilizer = head @ period @ head.inverse()
    # omega has leading coefficient 1, so y is the lower-left entry
    unit = PellSolution(abs(stabilizer.trace), abs(stabilizer.c), 4 * stabilizer.det)
    logger.debug(f"D={D}: period length {len(e.period)}, unit ({unit.x}, {unit.y}) norm {unit.rhs // 4}")
    if unit.rhs == -4:
        return unit, pell_compose(unit, unit, D)
    return None, unit


def gamma(poly: IntPoly2, s: PellSolution) -> Matrix2:
    """[[(x - y*q)/2, -y*r], [y*p, (x + y*q)/2]] for the primitive polynomial (p, q, r)"""
    if (s.x - s.y * poly.q) % 2:
        raise ParityViolation(f"x={s.x} and y*q={s.y * poly.q} differ in parity")
    return Matrix2(
        (s.x - s.y * poly.q) // 2,
        -s.y * poly.r,
        s.y * poly.p,
        (s.x + s.y * poly.q) // 2,
    )
