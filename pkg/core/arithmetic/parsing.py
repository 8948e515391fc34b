"""
Text form of exact numbers.

Grammar: INT | INT/INT | sqrt(INT) | (INT +- INT*sqrt(INT))/INT | INT +- INT*sqrt(INT),
with optional whitespace and an optional '*' before sqrt.
"""

import logging
import re
from fractions import Fraction
from typing import Optional

from core.arithmetic.exact_real import ExactReal
from core.errors import NonPositiveInput, NumberSyntaxError

logger = logging.getLogger(__name__)

_RATIONAL = re.compile(r"(?P<num>[+-]?\d+)(?:/(?P<den>\d+))?")
_SURD = re.compile(
    r"(?:(?P<p>[+-]?\d+)(?P<op>[+-])|(?P<lead>[+-])?)"
    r"(?P<q>\d+)?\*?sqrt\((?P<d>[+-]?\d+)\)"
)
_OVER = re.compile(r"\((?P<inner>.+)\)/(?P<r>\d+)")
_DECIMAL = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+)")


def _parse_surd(body: str) -> Optional[tuple[int, int, int]]:
    m = _SURD.fullmatch(body)
    if m is None:
        return None
    q = int(m["q"]) if m["q"] else 1
    if m["p"] is not None:
        p = int(m["p"])
        if m["op"] == "-":
            q = -q
    else:
        p = 0
        if m["lead"] == "-":
            q = -q
    return p, q, int(m["d"])


def parse(text: str, allow_decimal: bool = False, digits: int = 6) -> ExactReal:
    """Parse a number; decimals are snapped to a fraction only when allowed"""
    body = re.sub(r"\s+", "", text)
    if not body:
        raise NumberSyntaxError("empty number")

    m = _RATIONAL.fullmatch(body)
    if m:
        return ExactReal.rational(int(m["num"]), int(m["den"] or 1))

    surd = _parse_surd(body)
    if surd is not None:
        p, q, d = surd
        return ExactReal(p, q, d, 1)

    m = _OVER.fullmatch(body)
    if m:
        inner = _parse_surd(m["inner"])
        if inner is None:
            inner_rational = _RATIONAL.fullmatch(m["inner"])
            if inner_rational is None or inner_rational["den"]:
                raise NumberSyntaxError(f"cannot parse number '{text}'")
            inner = (int(inner_rational["num"]), 0, 1)
        p, q, d = inner
        return ExactReal(p, q, d, int(m["r"]))

    if _DECIMAL.fullmatch(body):
        if not allow_decimal:
            raise NumberSyntaxError(
                f"decimal '{text}' is not exact; pass --unsafe-approx to snap it to a fraction"
            )
        snapped = Fraction(body).limit_denominator(10 ** digits)
        logger.warning(f"approximating {body} by {snapped}; classification may differ from the intended real")
        return ExactReal.from_fraction(snapped)

    raise NumberSyntaxError(f"cannot parse number '{text}'")


def parse_positive(text: str, allow_decimal: bool = False, digits: int = 6) -> ExactReal:
    value = parse(text, allow_decimal=allow_decimal, digits=digits)
    if value.sign() <= 0:
        raise NonPositiveInput(f"{text} must be positive")
    return value


def _format_surd(p: int, q: int, d: int) -> str:
    root = f"sqrt({d})"
    coefficient = root if abs(q) == 1 else f"{abs(q)}*{root}"
    if p == 0:
        return coefficient if q > 0 else f"-{coefficient}"
    return f"{p}{'+' if q > 0 else '-'}{coefficient}"


def format_exact(x: ExactReal) -> str:
    """Shortest grammar production for x"""
    p, q, d, r = x.parts()
    if q == 0:
        return str(p) if r == 1 else f"{p}/{r}"
    inner = _format_surd(p, q, d)
    return inner if r == 1 else f"({inner})/{r}"
