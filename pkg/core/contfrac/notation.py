"""
Textual continued fractions: [a0; a1, a2] and [a0; a1, (c0, c1)]
"""

import re

from core.contfrac.convergents import cf_value
from core.contfrac.expansion import CfExpansion, cf_expand
from core.errors import CfSyntaxError

_BRACKETS = re.compile(r"\[(?P<body>[^\[\]]*)\]")
_PERIOD = re.compile(r"(?P<head>[^()]*?)[,;]?\s*\((?P<period>[^()]*)\)\s*")


def _ints(chunk: str) -> list[int]:
    items = [item for item in re.split(r"[;,\s]+", chunk.strip()) if item]
    try:
        return [int(item) for item in items]
    except ValueError:
        raise CfSyntaxError(f"non-integer term in '{chunk}'") from None


def parse_cf(text: str) -> CfExpansion:
    """Parse and normalize to the canonical expansion of the same value"""
    m = _BRACKETS.fullmatch(text.strip())
    if m is None:
        raise CfSyntaxError(f"expected [..] around '{text}'")
    body = m["body"]
    period_match = _PERIOD.fullmatch(body)
    if period_match:
        head = _ints(period_match["head"])
        period = tuple(_ints(period_match["period"]))
        if not period:
            raise CfSyntaxError("empty period")
    else:
        head, period = _ints(body), None
        if not head:
            raise CfSyntaxError("empty continued fraction")
    if head and head[0] < 0:
        raise CfSyntaxError("first term must be non-negative")
    if any(a < 1 for a in head[1:]) or (period and any(a < 1 for a in period)):
        raise CfSyntaxError("terms after the first must be positive")
    return cf_expand(cf_value(CfExpansion(tuple(head), period)))


def format_cf(e: CfExpansion) -> str:
    parts = [str(a) for a in e.head]
    if e.period is not None:
        parts.append("(" + ", ".join(str(c) for c in e.period) + ")")
    if len(parts) == 1:
        return f"[{parts[0]}]"
    return f"[{parts[0]}; " + ", ".join(parts[1:]) + "]"
