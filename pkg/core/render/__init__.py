"""
SVG rendering of half-plane packings
"""

from .svg import (
    RenderSpec,
    collect_circles,
    default_render_window,
    enclosing_window,
    render_svg,
    trace_labels,
    write_svg,
)

__all__ = [
    'RenderSpec',
    'collect_circles',
    'default_render_window',
    'enclosing_window',
    'render_svg',
    'trace_labels',
    'write_svg',
]
