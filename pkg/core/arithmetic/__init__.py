"""
Exact arithmetic over the rationals and real quadratic fields
"""

from .exact_real import (
    ONE,
    ZERO,
    ExactReal,
    IntPoly2,
    Ordering,
    compare,
    conjugate,
    is_reduced,
    minimal_polynomial,
)
from .parsing import format_exact, parse, parse_positive

__all__ = [
    'ExactReal',
    'IntPoly2',
    'Ordering',
    'ZERO',
    'ONE',
    'compare',
    'conjugate',
    'is_reduced',
    'minimal_polynomial',
    'parse',
    'parse_positive',
    'format_exact',
]
