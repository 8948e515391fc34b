"""
Labelled half-plane Apollonian packings
"""

from .circles import BASE_LINE, Circle, HLine, Round, overlapping, touching
from .context import (
    PackingContext,
    TangentPair,
    circle_for_label,
    fill_bounded,
    fill_unbounded,
    invert_circle,
    make_packing,
    sqrt_curvature,
    tangent,
)
from .descartes import descartes_check, reflect
from .enumeration import (
    Fill,
    MaxGeneration,
    MinRadius,
    default_window,
    enumerate_circles,
    enumerate_fills,
    in_window,
)
from .labels import (
    X_LABEL,
    Y_LABEL,
    InversionSide,
    Label,
    Side,
    Tangency,
    invert_label,
    label_generation,
    label_tangency,
    parents,
    unique_bezout,
)

__all__ = [
    'BASE_LINE',
    'Circle',
    'Fill',
    'HLine',
    'InversionSide',
    'Label',
    'MaxGeneration',
    'MinRadius',
    'PackingContext',
    'Round',
    'Side',
    'Tangency',
    'TangentPair',
    'X_LABEL',
    'Y_LABEL',
    'circle_for_label',
    'default_window',
    'descartes_check',
    'enumerate_circles',
    'enumerate_fills',
    'fill_bounded',
    'fill_unbounded',
    'in_window',
    'invert_circle',
    'invert_label',
    'label_generation',
    'label_tangency',
    'make_packing',
    'overlapping',
    'parents',
    'reflect',
    'sqrt_curvature',
    'tangent',
    'touching',
    'unique_bezout',
]
