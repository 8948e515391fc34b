"""
Deterministic SVG rendering of a window of P_alpha
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import islice
from math import ceil
from pathlib import Path
from typing import Optional

from lxml import etree

from core.arithmetic import ExactReal
from core.errors import EmptyWindow
from core.packing import Circle, MaxGeneration, MinRadius, enumerate_fills, make_packing
from core.packing.enumeration import Bound, Window
from core.replacement import replace_states

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"


def default_render_window(alpha: ExactReal) -> Window:
    return -(alpha * alpha).inv(), ExactReal(4)


def enclosing_window(alpha: ExactReal, generations: int, include_offline: bool = True) -> Window:
    """Smallest window holding every round circle up to the given generation"""
    ctx = make_packing(alpha)
    circles = list(ctx.generators)
    circles.extend(fill.child for fill in enumerate_fills(
        ctx, MaxGeneration(generations), include_offline=include_offline))
    extents = [c.x_extent() for c in circles if not c.is_line]
    return min(lo for lo, _ in extents), max(hi for _, hi in extents)


@dataclass(frozen=True)
class RenderSpec:
    alpha: ExactReal
    window: Optional[Window] = None
    depth: Bound = field(default_factory=lambda: MaxGeneration(8))
    width_px: int = 800
    highlight_trace: Optional[int] = None
    include_offline_gasket: bool = True
    significant_digits: int = 12
    trace_fill: str = "#c0c0c0"

    def __post_init__(self) -> None:
        if self.width_px <= 0:
            raise ValueError("width_px must be positive")
        if self.window is not None and not self.window[0] < self.window[1]:
            raise ValueError("window must satisfy x_min < x_max")

    def resolved_window(self) -> Window:
        return self.window if self.window is not None else default_render_window(self.alpha)


def _visible(circle: Circle, window: Window) -> bool:
    if circle.is_line:
        return True
    lo, hi = circle.x_extent()
    return lo <= window[1] and hi >= window[0]


def _order(circle: Circle):
    if circle.is_line:
        return circle.generation, 0, circle.line_height, ExactReal(0)
    return circle.generation, 1, circle.shape.center_x, circle.shape.center_y


def collect_circles(spec: RenderSpec) -> list[Circle]:
    """Circles to draw, ordered by generation then abscissa"""
    ctx = make_packing(spec.alpha)
    window = spec.resolved_window()
    search_window = window if isinstance(spec.depth, MinRadius) else None
    circles = list(ctx.generators)
    circles.extend(fill.child for fill in enumerate_fills(
        ctx, spec.depth, search_window, include_offline=spec.include_offline_gasket))
    if isinstance(spec.depth, MinRadius):
        circles = [c for c in circles if c.is_line or c.radius >= spec.depth.r]
    visible = [c for c in circles if _visible(c, window)]
    if not any(not c.is_line for c in visible):
        raise EmptyWindow(f"no circle of the packing meets [{window[0]}, {window[1]}]")
    return sorted(visible, key=_order)


def trace_labels(spec: RenderSpec) -> set:
    if not spec.highlight_trace:
        return set()
    ctx = make_packing(spec.alpha)
    labels = set()
    for state in islice(replace_states(ctx), spec.highlight_trace):
        labels.update((state.x_label, state.y_label))
    return labels


def render_svg(spec: RenderSpec) -> str:
    """
    Render the circles of a spec as an SVG document, or raise EmptyWindow

    Args:
        spec: Number, window, depth bound and styling to render

    Returns:
        UTF-8 SVG text with a white background and one line or circle per
        visible circle, trace circles filled
    """
    circles = collect_circles(spec)
    gray = trace_labels(spec)
    x_min, x_max = spec.resolved_window()
    span = x_max - x_min
    scale = ExactReal(spec.width_px) / span
    # content height, capped at the window width
    top = max(c.line_height if c.is_line else c.shape.center_y + c.shape.radius for c in circles)
    top = min(top, span)
    height_px = max(1, ceil(float(top * scale)))

    def fmt(value: ExactReal) -> str:
        return format(float(value), f".{spec.significant_digits}g")

    root = etree.Element(f"{{{SVG_NS}}}svg", nsmap={None: SVG_NS}, attrib={
        "version": "1.1",
        "width": str(spec.width_px),
        "height": str(height_px),
        "viewBox": f"0 0 {spec.width_px} {height_px}",
    })
    etree.SubElement(root, f"{{{SVG_NS}}}rect", attrib={
        "width": "100%", "height": "100%", "fill": "white",
    })
    group = etree.SubElement(root, f"{{{SVG_NS}}}g", attrib={
        "stroke": "black", "stroke-width": "1", "fill": "none",
    })
    for circle in circles:
        attrib = {}
        if circle.is_line:
            y = fmt((top - circle.line_height) * scale)
            attrib.update({"x1": "0", "y1": y, "x2": str(spec.width_px), "y2": y})
            tag = "line"
        else:
            attrib.update({
                "cx": fmt((circle.shape.center_x - x_min) * scale),
                "cy": fmt((top - circle.shape.center_y) * scale),
                "r": fmt(circle.shape.radius * scale),
            })
            tag = "circle"
        if circle.label is not None and circle.label in gray:
            attrib["fill"] = spec.trace_fill
        etree.SubElement(group, f"{{{SVG_NS}}}{tag}", attrib=attrib)

    logger.debug(f"rendered {len(circles)} elements for alpha = {spec.alpha}")
    return etree.tostring(root, xml_declaration=True, encoding="UTF-8", pretty_print=True).decode("utf-8")


def write_svg(spec: RenderSpec, path: Path) -> int:
    """Render to a file; returns the number of bytes written"""
    text = render_svg(spec)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")
    logger.info(f"wrote {path}")
    return len(text.encode("utf-8"))
