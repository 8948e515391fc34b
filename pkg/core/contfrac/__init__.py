"""
Continued fractions: exact expansion, step traces and convergents
"""

from .convergents import (
    Convergent,
    apply_mat,
    cf_value,
    convergent_matrix,
    convergents,
    period_fixed_point,
    terms_matrix,
)
from .expansion import (
    CfExpansion,
    Step,
    StripClass,
    canonical_class,
    cf_expand,
    cf_states,
    eventually_equal,
    is_odd_period,
    least_rotation,
    step_trace,
)
from .notation import format_cf, parse_cf

__all__ = [
    'CfExpansion',
    'Convergent',
    'Step',
    'StripClass',
    'apply_mat',
    'canonical_class',
    'cf_expand',
    'cf_states',
    'cf_value',
    'convergent_matrix',
    'convergents',
    'eventually_equal',
    'format_cf',
    'is_odd_period',
    'least_rotation',
    'parse_cf',
    'period_fixed_point',
    'step_trace',
    'terms_matrix',
]
