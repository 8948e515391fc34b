"""
Similarities and self-similarities of half-plane packings
"""

from .matrix import Matrix2, apply_moebius
from .pell import (
    PellSolution,
    check_discriminant,
    gamma,
    order_generator,
    pell_compose,
    pell_fundamental,
)
from .similarity import (
    NOT_SIMILAR,
    Orientations,
    SimilarityResult,
    similar,
    similarity_orientations,
)
from .symm_group import (
    SymmDescription,
    SymmKind,
    class_of,
    generator_action_check,
    orientation_reversing_exists,
    scale_sq,
    stabilizer_generator,
    symm_group,
)

__all__ = [
    'Matrix2',
    'NOT_SIMILAR',
    'Orientations',
    'PellSolution',
    'SimilarityResult',
    'SymmDescription',
    'SymmKind',
    'apply_moebius',
    'check_discriminant',
    'class_of',
    'gamma',
    'generator_action_check',
    'order_generator',
    'orientation_reversing_exists',
    'pell_compose',
    'pell_fundamental',
    'scale_sq',
    'similar',
    'similarity_orientations',
    'stabilizer_generator',
    'symm_group',
]
