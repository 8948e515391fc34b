"""
Circle replacement on tangent pairs (X_n, Y_n), mirroring the continued fraction algorithm.

(A) curv(X) >= curv(Y): replace X by the fill of the unbounded interstice.
(B) 0 < curv(X) < curv(Y): swap X and Y.
(C) X is a line: stop.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from itertools import islice
from typing import Iterator, Optional

from core.arithmetic import ExactReal
from core.contfrac import Step
from core.errors import ExhaustedRun, Halted
from core.packing import X_LABEL, Y_LABEL, Circle, Label, PackingContext, circle_for_label

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReplacementState:
    step_index: int
    x_label: Label
    y_label: Label
    x_sqrt_curv: ExactReal
    y_sqrt_curv: ExactReal
    last_step: Optional[Step] = None

    @property
    def ratio(self) -> ExactReal:
        return self.x_sqrt_curv / self.y_sqrt_curv

    @property
    def halted(self) -> bool:
        return self.x_sqrt_curv.is_zero()

    @property
    def next_step(self) -> Step:
        if self.halted:
            return Step.C
        return Step.A if self.x_sqrt_curv >= self.y_sqrt_curv else Step.B

    def circles(self, ctx: PackingContext) -> tuple[Circle, Circle]:
        return circle_for_label(ctx, self.x_label), circle_for_label(ctx, self.y_label)


def initial_state(ctx: PackingContext) -> ReplacementState:
    return ReplacementState(0, X_LABEL, Y_LABEL, ctx.alpha, ExactReal(1))


def replace_step(ctx: PackingContext, state: ReplacementState) -> ReplacementState:
    step = state.next_step
    if step is Step.C:
        raise Halted(f"X_{state.step_index} is a line; the run is over")
    if step is Step.A:
        return replace(
            state,
            step_index=state.step_index + 1,
            x_label=(state.x_label - state.y_label).normalized(ctx.alpha),
            x_sqrt_curv=state.x_sqrt_curv - state.y_sqrt_curv,
            last_step=step,
        )
    return ReplacementState(
        state.step_index + 1,
        state.y_label,
        state.x_label,
        state.y_sqrt_curv,
        state.x_sqrt_curv,
        step,
    )


def replace_states(ctx: PackingContext) -> Iterator[ReplacementState]:
    """All visited states, ending with the halting one for rational alpha"""
    state = initial_state(ctx)
    yield state
    while not state.halted:
        state = replace_step(ctx, state)
        yield state


def replace_trace(ctx: PackingContext, max_steps: int) -> tuple[str, list[ReplacementState]]:
    """Letters (letter n applied at state n, terminal C included) and the visited states"""
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    letters: list[str] = []
    states: list[ReplacementState] = []
    for state in replace_states(ctx):
        states.append(state)
        if len(letters) == max_steps:
            break
        letters.append(state.next_step.value)
    return "".join(letters), states


def distinct_y_circles(ctx: PackingContext, count: int) -> list[Label]:
    """The first `count` distinct circles among Y_0, Y_1, ..."""
    if count < 1:
        raise ValueError("count must be at least 1")
    labels: list[Label] = []
    for state in replace_states(ctx):
        if not labels or labels[-1] != state.y_label:
            labels.append(state.y_label)
            if len(labels) == count:
                return labels
    raise ExhaustedRun(f"the run for alpha = {ctx.alpha} has only {len(labels)} distinct Y circles")


def state_at(ctx: PackingContext, n: int) -> ReplacementState:
    state = next(islice(replace_states(ctx), n, None), None)
    if state is None:
        raise ExhaustedRun(f"the run for alpha = {ctx.alpha} stops before step {n}")
    return state
