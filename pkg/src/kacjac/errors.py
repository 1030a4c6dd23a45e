"""Exception hierarchy shared by the kacjac modules."""


class KacJacError(Exception):
    """Base class for all errors raised by kacjac."""


class RankError(KacJacError, ValueError):
    """Rank outside the supported range (``rank_zero`` / ``rank_too_large``)."""


class LevelMismatchError(KacJacError, ValueError):
    pass


class IncompatibleGridError(KacJacError, ValueError):
    """Two q-series whose exponents do not live on a common grid."""


class NonexactDivisionError(KacJacError, ArithmeticError):
    """An exact division left a remainder.

    ``exponent`` is the first q-exponent at which the recursion failed, when
    the failure happened inside a series division.
    """

    def __init__(self, message, exponent=None):
        super().__init__(message)
        self.exponent = exponent


class NotConvergentError(KacJacError, ValueError):
    """Evaluation requested outside the upper half plane."""


class NonintegralClassError(KacJacError, ValueError):
    pass


class InconsistentExpansionError(KacJacError, ArithmeticError):
    pass


class InsufficientOrderError(KacJacError, ValueError):
    pass


class NotProportionalError(KacJacError, ArithmeticError):
    """A Jacobian quotient still depends on the torus variables."""


class MismatchError(KacJacError, ArithmeticError):
    def __init__(self, message, exponent=None):
        super().__init__(message)
        self.exponent = exponent


class BadParityError(KacJacError, ValueError):
    pass


class OutOfRangeError(KacJacError, ValueError):
    pass
