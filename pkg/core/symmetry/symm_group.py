"""
Self-similarity groups of P_alpha
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from core.arithmetic import ExactReal
from core.contfrac import canonical_class, cf_expand, is_odd_period, terms_matrix
from core.errors import InternalInconsistency, NonPositiveInput, NotReduced
from core.packing import Label, make_packing
from core.replacement import state_at
from core.symmetry.matrix import Matrix2
from core.symmetry.pell import PellSolution, gamma, pell_fundamental

logger = logging.getLogger(__name__)


class SymmKind(str, Enum):
    TRIVIAL = "trivial"  # only for reals of degree >= 3, which ExactReal cannot hold
    STRIP = "strip"      # D_infinity x Z/2
    CYCLIC = "cyclic"    # Z


@dataclass(frozen=True)
class SymmDescription:
    kind: SymmKind
    generator: Optional[Matrix2] = None
    scale_sq: Optional[ExactReal] = None
    generator_reverses: Optional[bool] = None
    pell: Optional[PellSolution] = None


def _require_positive(alpha: ExactReal) -> None:
    if alpha.sign() <= 0:
        raise NonPositiveInput(f"alpha must be positive, got {alpha}")


def scale_sq(m: Matrix2, alpha: ExactReal) -> ExactReal:
    """Square of the curvature scale c*alpha + d of a stabilizing matrix"""
    scale = alpha * m.c + m.d
    return scale * scale


def curvature_growing(m: Matrix2, alpha: ExactReal) -> Matrix2:
    """m or its inverse, whichever multiplies curvatures by more than one"""
    return m if scale_sq(m, alpha) > 1 else m.inverse()


def symm_group(alpha: ExactReal) -> SymmDescription:
    """
    Describe the self-similarity group of P_alpha

    Args:
        alpha: Positive rational or quadratic irrational

    Returns:
        SymmDescription of kind STRIP for rationals; for quadratics a CYCLIC
        group with its generator, the squared scale factor, whether the
        generator reverses orientation and the Pell solution behind it
    """
    _require_positive(alpha)
    if alpha.is_rational:
        return SymmDescription(SymmKind.STRIP)
    poly = alpha.minimal_polynomial()
    negative, positive = pell_fundamental(poly.D)
    fundamental = negative if negative is not None else positive
    generator = gamma(poly, fundamental)
    if scale_sq(generator, alpha) < 1:
        generator = generator.inverse()
    return SymmDescription(
        SymmKind.CYCLIC,
        generator,
        scale_sq(generator, alpha),
        generator.det == -1,
        fundamental,
    )


def stabilizer_generator(alpha: ExactReal) -> Matrix2:
    """Generator of the stabilizer read off the continued fraction period"""
    _require_positive(alpha)
    e = cf_expand(alpha)
    if e.period is None:
        raise NonPositiveInput(f"{alpha} is rational; its stabilizer is not cyclic")
    head = Matrix2(*terms_matrix(e.head))
    return curvature_growing(head @ Matrix2(*terms_matrix(e.period)) @ head.inverse(), alpha)


def orientation_reversing_exists(alpha: ExactReal) -> bool:
    """Decided twice: by period parity and by solvability of x^2 - D*y^2 = -4"""
    _require_positive(alpha)
    if alpha.is_rational:
        return True
    by_period = is_odd_period(cf_expand(alpha))
    negative, _ = pell_fundamental(alpha.minimal_polynomial().D)
    by_pell = negative is not None
    if by_period != by_pell:
        raise InternalInconsistency(
            f"alpha = {alpha}: odd period says {by_period}, Pell -4 says {by_pell}"
        )
    return by_period


def generator_action_check(alpha: ExactReal, repeats: int = 1) -> bool:
    """Check that the expanding symmetry sends (X_0, Y_0) to (X_kN, Y_kN).

    N is the sum of the period plus its length. The expanding map is the
    inverse of the generator; its rows, as labels, name the image circles.
    """
    _require_positive(alpha)
    if alpha.is_rational or not alpha.is_reduced():
        raise NotReduced(f"{alpha} is not a reduced quadratic irrational")
    period = cf_expand(alpha).period
    n = sum(period) + len(period)
    ctx = make_packing(alpha)
    phi = symm_group(alpha).generator.inverse()
    for k in range(1, repeats + 1):
        power = phi ** k
        state = state_at(ctx, k * n)
        rows = [Label(*row).normalized(alpha) for row in power.rows]
        logger.debug(f"step {k * n}: rows {rows}, state ({state.x_label}, {state.y_label})")
        if rows != [state.x_label, state.y_label]:
            return False
    return True


def class_of(alpha: ExactReal):
    _require_positive(alpha)
    return canonical_class(cf_expand(alpha))
