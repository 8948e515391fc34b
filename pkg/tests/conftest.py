import os
from math import isqrt
from typing import Optional

import pytest

# Keep the suite independent of a developer's .env
os.environ.setdefault("HALFPLANE_LOG_LEVEL", "WARNING")

from core.arithmetic import ExactReal, parse

# One representative per self-similar class used throughout the suite
CLASS_EXAMPLES = {
    (1,): "(1+sqrt(5))/2",
    (2,): "1+sqrt(2)",
    (3,): "(3+sqrt(13))/2",
    (1, 2): "(1+sqrt(3))/2",
}


def brute_force_pell(D: int, rhs: int, limit: int = 10 ** 5) -> Optional[tuple[int, int]]:
    """Smallest y >= 1 with x^2 - D*y^2 == rhs, searched directly"""
    for y in range(1, limit + 1):
        square = D * y * y + rhs
        if square < 0:
            continue
        x = isqrt(square)
        if x * x == square:
            return x, y
    return None


@pytest.fixture
def golden() -> ExactReal:
    return parse("(1+sqrt(5))/2")


@pytest.fixture
def seven_fifths() -> ExactReal:
    return ExactReal.rational(7, 5)


@pytest.fixture(params=list(CLASS_EXAMPLES.items()), ids=lambda item: "-".join(map(str, item[0])))
def class_example(request):
    """(period, alpha) for each of the four self-similar classes"""
    period, text = request.param
    return period, parse(text)
