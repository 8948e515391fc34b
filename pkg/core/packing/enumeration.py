"""
Generation-wise construction of the packing by filling interstices
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from core.arithmetic import ExactReal
from core.errors import TooManyCircles
from core.packing.circles import Circle
from core.packing.context import PackingContext, TangentPair, circle_for_label, fill_bounded
from core.packing.descartes import reflect

logger = logging.getLogger(__name__)

Window = tuple[ExactReal, ExactReal]


@dataclass(frozen=True)
class MaxGeneration:
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("generation bound must be non-negative")


@dataclass(frozen=True)
class MinRadius:
    r: ExactReal

    def __post_init__(self) -> None:
        if self.r.sign() <= 0:
            raise ValueError("radius bound must be positive")


Bound = Union[MaxGeneration, MinRadius]


@dataclass(frozen=True)
class Interstice:
    """Three mutually tangent circles and the filled circle across from the gap"""

    members: tuple[Circle, Circle, Circle]
    opposite: Optional[Circle]
    generation: int

    @property
    def on_base(self) -> bool:
        return any(m.is_base_line for m in self.members)


@dataclass(frozen=True)
class Fill:
    members: tuple[Circle, Circle, Circle]
    opposite: Optional[Circle]
    child: Circle


def default_window(alpha: ExactReal) -> Window:
    """The stretch of the base line between X and Y"""
    return ExactReal(0), ExactReal(2) / alpha


def _base_region(interstice: Interstice) -> tuple[Optional[ExactReal], Optional[ExactReal], bool]:
    """Stretch of the base line the interstice touches, as (lo, hi, complement).

    None stands for an infinite end; complement means the region is
    everything outside [lo, hi].
    """
    others = [m for m in interstice.members if not m.is_base_line]
    rounds = sorted((m for m in others if not m.is_line), key=lambda m: m.abscissa)
    opposite = interstice.opposite
    if len(rounds) == 1:
        t = rounds[0].abscissa
        if opposite.abscissa > t:
            return None, t, False
        return t, None, False
    lo, hi = rounds[0].abscissa, rounds[1].abscissa
    if opposite is not None and not opposite.is_line and lo < opposite.abscissa < hi:
        return lo, hi, True
    return lo, hi, False


def _region_meets(region: tuple[Optional[ExactReal], Optional[ExactReal], bool], window: Window) -> bool:
    lo, hi, complement = region
    w0, w1 = window
    if complement:
        return w0 < lo or w1 > hi
    return (lo is None or lo < w1) and (hi is None or hi > w0)


def _extent_meets(circles, window: Window) -> bool:
    w0, w1 = window
    extents = [c.x_extent() for c in circles if not c.is_line]
    if not extents:
        return True
    return min(e[0] for e in extents) <= w1 and max(e[1] for e in extents) >= w0


def in_window(circle: Circle, window: Optional[Window]) -> bool:
    """Lines always; labelled circles by tangency point; others by x-extent"""
    if window is None or circle.is_line:
        return True
    w0, w1 = window
    if circle.label is not None:
        return w0 <= circle.abscissa <= w1
    lo, hi = circle.x_extent()
    return lo <= w1 and hi >= w0


def _fill(ctx: PackingContext, interstice: Interstice) -> Circle:
    generation = interstice.generation
    if not interstice.on_base:
        return reflect(interstice.members, interstice.opposite, generation)
    m1, m2 = [m for m in interstice.members if not m.is_base_line]
    if interstice.opposite is None:
        return fill_bounded(ctx, TangentPair.of(m1, m2)).with_generation(generation)
    excluded = interstice.opposite.label.normalized(ctx.alpha)
    for candidate in (m1.label + m2.label, m1.label - m2.label):
        label = candidate.normalized(ctx.alpha)
        if label != excluded:
            return circle_for_label(ctx, label, generation)
    raise AssertionError("both circles tangent to a labelled triple coincide")


def enumerate_fills(
    ctx: PackingContext,
    bound: Bound,
    window: Optional[Window] = None,
    include_offline: bool = False,
    generators: Optional[tuple[Circle, Circle]] = None,
) -> Iterator[Fill]:
    """Fill interstices breadth first, one generation at a time.

    Starts from the base line and a tangent pair (X and Y by default). Only
    interstices containing the base line are followed unless include_offline
    is set. Under MinRadius the window also bounds the search.
    """
    base = ctx.base
    a, b = generators if generators is not None else (ctx.x, ctx.y)
    a, b = a.with_generation(0), b.with_generation(0)
    first = fill_bounded(ctx, TangentPair.of(a, b)).with_generation(1)
    queue = deque([
        Interstice((base, a, b), None, 1),
        Interstice((base, a, b), first, 1),
    ])
    if isinstance(bound, MinRadius) and window is None:
        window = default_window(ctx.alpha)

    current = 0
    while queue:
        interstice = queue.popleft()
        if interstice.generation != current:
            current = interstice.generation
            logger.debug(f"filling generation {current}: {len(queue) + 1} interstices")
        if isinstance(bound, MaxGeneration) and interstice.generation > bound.n:
            continue
        bounded = True
        child = None
        if isinstance(bound, MinRadius):
            if interstice.on_base:
                child = _fill(ctx, interstice)
                # a parallel line meets every window
                if not child.is_line:
                    region = _base_region(interstice)
                    if not _region_meets(region, window):
                        continue
                    lo, hi, complement = region
                    bounded = not complement and lo is not None and hi is not None
            elif not _extent_meets(interstice.members, window):
                continue
        if child is None:
            child = _fill(ctx, interstice)
        # nothing inside a bounded gap is larger than its inscribed circle
        if isinstance(bound, MinRadius) and bounded and not child.is_line and child.radius < bound.r:
            continue
        yield Fill(interstice.members, interstice.opposite, child)
        c1, c2, c3 = interstice.members
        for pair, across in (((c1, c2), c3), ((c1, c3), c2), ((c2, c3), c1)):
            nxt = Interstice((pair[0], pair[1], child), across, interstice.generation + 1)
            if include_offline or nxt.on_base:
                queue.append(nxt)


def _sort_key(circle: Circle):
    if circle.is_line:
        return 0, circle.line_height, ExactReal(0)
    return 1, circle.shape.center_x, circle.shape.center_y


def enumerate_circles(
    ctx: PackingContext,
    bound: Bound,
    window: Optional[Window] = None,
    include_offline: bool = False,
    generators: Optional[tuple[Circle, Circle]] = None,
    limit: Optional[int] = None,
) -> list[Circle]:
    """
    Enumerate the circles of P_alpha down to a depth bound

    Args:
        ctx: Packing to enumerate
        bound: MaxGeneration or MinRadius; a MinRadius without a window
            searches the default window
        window: Abscissa range [x_min, x_max] circles must meet
        include_offline: Also fill the interstices away from the base line
        generators: Tangent pair of labelled circles to start from, X and Y by default
        limit: Raise TooManyCircles once more circles than this are found

    Returns:
        Circles with generations set, lines first by height, then round
        circles by centre
    """
    a, b = generators if generators is not None else (ctx.x, ctx.y)
    found = [ctx.base, a.with_generation(0), b.with_generation(0)]
    if isinstance(bound, MinRadius) and window is None:
        window = default_window(ctx.alpha)
    for fill in enumerate_fills(ctx, bound, window, include_offline, generators):
        found.append(fill.child)
        if limit is not None and len(found) > limit:
            raise TooManyCircles(f"more than {limit} circles; tighten the bound")

    def keep(circle: Circle) -> bool:
        if isinstance(bound, MinRadius) and not circle.is_line and circle.radius < bound.r:
            return False
        return in_window(circle, window)

    result = sorted(filter(keep, found), key=_sort_key)
    logger.debug(f"enumerated {len(result)} circles for alpha = {ctx.alpha}")
    return result
