"""
Similarity of packings: decided by continued fraction tails, witnessed by PGL2(Z) matrices
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from core.arithmetic import ExactReal
from core.contfrac import CfExpansion, cf_expand, convergent_matrix, eventually_equal, terms_matrix
from core.errors import InternalInconsistency, NonPositiveInput
from core.symmetry.matrix import Matrix2, apply_moebius
from core.symmetry.symm_group import orientation_reversing_exists, stabilizer_generator

logger = logging.getLogger(__name__)


class Orientations(str, Enum):
    NONE = "none"
    BOTH = "both"
    ONLY_PRESERVING = "only_preserving"
    ONLY_REVERSING = "only_reversing"


@dataclass(frozen=True)
class SimilarityResult:
    similar: bool
    witness: Optional[Matrix2] = None

    @property
    def det(self) -> Optional[int]:
        return None if self.witness is None else self.witness.det


NOT_SIMILAR = SimilarityResult(False)


def _tail_matrix(e: CfExpansion, shift: int = 0) -> Matrix2:
    """Matrix sending the complete quotient at index len(head) + shift to the value"""
    return Matrix2(*convergent_matrix(e, len(e.head) + shift))


def _rotation(p1: tuple[int, ...], p2: tuple[int, ...]) -> int:
    """k with p1 rotated left by k equal to p2"""
    for k in range(len(p1)):
        if p1[k:] + p1[:k] == p2:
            return k
    raise InternalInconsistency(f"periods {p1} and {p2} are not rotations")


def _reduce(witness: Matrix2, stabilizer: Matrix2) -> Matrix2:
    """Descend along the coset witness * stabilizer^j to its smallest member"""
    steps = (stabilizer, stabilizer.inverse())
    while True:
        best = min((witness @ s for s in steps), key=Matrix2.size_key)
        if best.size_key() >= witness.size_key():
            return witness
        witness = best


def similar(alpha: ExactReal, beta: ExactReal) -> SimilarityResult:
    """
    Decide whether P_alpha and P_beta are similar

    Args:
        alpha: Positive rational or quadratic irrational
        beta: Positive rational or quadratic irrational

    Returns:
        SimilarityResult; when similar, the witness is a PGL2(Z) matrix sending
        alpha to beta, smallest in its coset of the stabilizer of alpha
    """
    if alpha.sign() <= 0 or beta.sign() <= 0:
        raise NonPositiveInput(f"similarity needs positive numbers, got {alpha} and {beta}")
    ea, eb = cf_expand(alpha), cf_expand(beta)
    if not eventually_equal(ea, eb):
        return NOT_SIMILAR
    if ea.is_finite:
        # both rational: route through the common tail value infinity
        ma, mb = Matrix2(*terms_matrix(ea.head)), Matrix2(*terms_matrix(eb.head))
        witness = mb @ ma.inverse()
    else:
        shift = _rotation(ea.period, eb.period)
        witness = _tail_matrix(eb) @ _tail_matrix(ea, shift).inverse()
        witness = _reduce(witness, stabilizer_generator(alpha))
    if apply_moebius(witness, alpha) != beta:
        raise InternalInconsistency(f"witness {witness} does not map {alpha} to {beta}")
    logger.debug(f"{alpha} ~ {beta} via {witness}")
    return SimilarityResult(True, witness)


def similarity_orientations(alpha: ExactReal, beta: ExactReal) -> Orientations:
    """Which orientations similarities from P_alpha onto P_beta can have"""
    result = similar(alpha, beta)
    if not result.similar:
        return Orientations.NONE
    if orientation_reversing_exists(alpha):
        return Orientations.BOTH
    return Orientations.ONLY_PRESERVING if result.det == 1 else Orientations.ONLY_REVERSING
