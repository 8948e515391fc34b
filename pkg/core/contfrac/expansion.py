from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import count, islice
from typing import Iterator, Optional, Union

from core.arithmetic import ExactReal
from core.errors import NonPositiveInput

logger = logging.getLogger(__name__)


class Step(str, Enum):
    """Letters of the unbatched continued fraction algorithm"""

    A = "A"  # subtract one
    B = "B"  # invert
    C = "C"  # halt on zero


class StripClass(str, Enum):
    STRIP = "strip"


ClassKey = Union[StripClass, tuple[int, ...]]


@dataclass(frozen=True)
class CfExpansion:
    """Continued fraction [head..., (period...)]; period None means finite"""

    head: tuple[int, ...]
    period: Optional[tuple[int, ...]] = None

    @property
    def is_finite(self) -> bool:
        return self.period is None

    @property
    def is_purely_periodic(self) -> bool:
        return self.period is not None and not self.head

    def __len__(self) -> int:
        if self.period is not None:
            raise TypeError("periodic expansion has no length")
        return len(self.head)

    def term(self, n: int) -> int:
        if n < len(self.head):
            return self.head[n]
        if self.period is None:
            raise IndexError(n)
        return self.period[(n - len(self.head)) % len(self.period)]

    def terms(self) -> Iterator[int]:
        yield from self.head
        if self.period is not None:
            for n in count():
                yield self.period[n % len(self.period)]

    def __str__(self) -> str:
        from core.contfrac.notation import format_cf

        return format_cf(self)


def _require_positive(alpha: ExactReal) -> None:
    if alpha.sign() <= 0:
        raise NonPositiveInput(f"continued fractions need alpha > 0, got {alpha}")


def cf_states(alpha: ExactReal) -> Iterator[tuple[Step, ExactReal]]:
    """Yield (letter, alpha_n): the letter applied at state alpha_n.

    The generator ends after C; for irrational alpha it never ends.
    """
    _require_positive(alpha)
    state = alpha
    while True:
        if state.is_zero():
            yield Step.C, state
            return
        if state >= 1:
            yield Step.A, state
            state = state - 1
        else:
            yield Step.B, state
            state = state.inv()


def step_trace(alpha: ExactReal, max_steps: int) -> str:
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    return "".join(letter.value for letter, _ in islice(cf_states(alpha), max_steps))


def cf_expand(alpha: ExactReal) -> CfExpansion:
    """Expand alpha > 0, detecting the period of a quadratic by exact state repetition"""
    _require_positive(alpha)
    terms: list[int] = []
    seen: dict[ExactReal, int] = {}
    x = alpha
    while True:
        if not x.is_rational:
            if x in seen:
                start = seen[x]
                logger.debug(f"period of {alpha} found: head {start} terms, period {len(terms) - start}")
                return CfExpansion(tuple(terms[:start]), tuple(terms[start:]))
            seen[x] = len(terms)
        a = x.floor()
        terms.append(a)
        frac = x - a
        if frac.is_zero():
            return CfExpansion(tuple(terms))
        x = frac.inv()


def least_rotation(period: tuple[int, ...]) -> tuple[int, ...]:
    return min(period[i:] + period[:i] for i in range(len(period)))


def canonical_class(e: CfExpansion) -> ClassKey:
    if e.period is None:
        return StripClass.STRIP
    return least_rotation(e.period)


def eventually_equal(e1: CfExpansion, e2: CfExpansion) -> bool:
    if e1.is_finite and e2.is_finite:
        return True
    if e1.is_finite or e2.is_finite:
        return False
    return canonical_class(e1) == canonical_class(e2)


def is_odd_period(e: CfExpansion) -> bool:
    return e.period is not None and len(e.period) % 2 == 1
