"""Exception hierarchy shared by every layer of the package."""


class QfunError(Exception):
    """Base class for all errors raised by qfun."""


class InexactDivision(QfunError, ArithmeticError):
    """A polynomial division that was expected to be exact left a remainder."""


class NotExpandable(QfunError, ValueError):
    """The rational function has no power series expansion at the origin."""


class DenominatorVanishes(QfunError, ZeroDivisionError):
    """A substitution sent a denominator to the zero polynomial."""


class ShapeMismatch(QfunError, ValueError):
    """Matrix or index-set dimensions are incompatible."""


class NotSkewSymmetric(QfunError, ValueError):
    """A square array offered as a skew-symmetric matrix is not skew."""


class ParityViolation(QfunError, ValueError):
    """A size or cardinality has the wrong parity for the requested identity."""


class ZeroPivot(QfunError, ZeroDivisionError):
    """The pivot sub-Pfaffian of a Sylvester-type quotient is identically zero."""


class NotInvertiblePivot(QfunError, ArithmeticError):
    """Elimination met a pivot it cannot divide by in the entry ring."""


class AlgorithmMismatch(QfunError, ArithmeticError):
    """Two independent Pfaffian algorithms returned different values."""
