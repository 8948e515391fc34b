"""
Exception hierarchy for the half-plane packing engines
"""


class HalfPlaneError(Exception):
    """Base class for every engine error"""


# Arithmetic

class DivisionByZero(HalfPlaneError, ZeroDivisionError):
    """Division or inversion by an exact zero"""


class IncompatibleRadicand(HalfPlaneError, ValueError):
    """Operands live in different quadratic fields"""

    def __init__(self, d1: int, d2: int):
        super().__init__(f"incompatible radicands sqrt({d1}) and sqrt({d2})")
        self.d1 = d1
        self.d2 = d2


class NotQuadratic(HalfPlaneError, ValueError):
    """A quadratic irrational was required"""


class NumberSyntaxError(HalfPlaneError, ValueError):
    """Text does not match the number grammar"""


class PerfectSquareRadicand(HalfPlaneError, ValueError):
    """Radicand is not usable (d <= 0)"""


class NonPositiveInput(HalfPlaneError, ValueError):
    """A strictly positive number was required"""


# Continued fractions

class IndexOutOfRange(HalfPlaneError, IndexError):
    """Convergent index beyond a finite expansion"""


class CfSyntaxError(HalfPlaneError, ValueError):
    """Text does not match the continued fraction grammar"""


# Packing

class UnnormalizedLabel(HalfPlaneError, ValueError):
    """Label (a, b) with a*alpha + b < 0"""


class NotTangent(HalfPlaneError, ValueError):
    """Two circles were expected to be tangent"""


class LineOperand(HalfPlaneError, ValueError):
    """A round circle was expected but a line was given"""


class NotCoprime(HalfPlaneError, ValueError):
    """Integer pair with a common factor"""


class WrongSide(HalfPlaneError, ValueError):
    """An unbounded fill was requested on the side where it does not lie"""


class TooManyCircles(HalfPlaneError):
    """Enumeration exceeded its circle limit"""


# Replacement

class Halted(HalfPlaneError):
    """The replacement algorithm already stopped at a line"""


class ExhaustedRun(HalfPlaneError):
    """A finite run has fewer circles than requested"""


# Symmetry

class NotUnimodular(HalfPlaneError, ValueError):
    """Integer matrix whose determinant is not +-1"""


class PoleInput(HalfPlaneError, ZeroDivisionError):
    """Moebius map evaluated at its pole"""


class BadDiscriminant(HalfPlaneError, ValueError):
    """Discriminant is not that of a real quadratic order"""


class ParityViolation(HalfPlaneError, ValueError):
    """Pell solution has x and y*q of different parity"""


class NotReduced(HalfPlaneError, ValueError):
    """A reduced quadratic irrational was required"""


class InternalInconsistency(HalfPlaneError, AssertionError):
    """Two independent computations disagreed"""


# Render

class EmptyWindow(HalfPlaneError, ValueError):
    """No circle meets the render window"""


class NotRational(HalfPlaneError, ValueError):
    """A rational number was required"""
