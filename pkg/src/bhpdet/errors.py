"""Exception hierarchy shared by every module."""


class BhpdetError(Exception):
    pass


class ZeroDivisor(BhpdetError, ZeroDivisionError):
    """A reciprocal shifted factorial hit a zero factor."""


class NegativeFactorial(BhpdetError, ValueError):
    pass


class NegativeArgument(BhpdetError, ValueError):
    pass


class InexactDivision(BhpdetError, ArithmeticError):
    pass


class BadShape(BhpdetError, ValueError):
    pass


class RangeError(BhpdetError, ValueError):
    pass


class ParityError(BhpdetError, ValueError):
    pass


class NotSquare(BhpdetError, ValueError):
    pass


class DimensionCap(BhpdetError, ValueError):
    pass


class InterpolationMismatch(BhpdetError, ArithmeticError):
    """The sentinel node disagreed with the interpolant: the degree bound was too small."""


class NonPolynomialResult(BhpdetError, ArithmeticError):
    pass


class OddHalfIntegerPower(BhpdetError, ValueError):
    pass


class NonTerminating(BhpdetError, ValueError):
    pass


class DegenerateLower(BhpdetError, ZeroDivisionError):
    pass


class UnmatchedArguments(BhpdetError, ValueError):
    pass


class NumeratorPole(BhpdetError, ValueError):
    pass


class UsageError(BhpdetError, ValueError):
    pass
