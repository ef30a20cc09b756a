"""Exception taxonomy shared across the package."""


class CitemetricError(Exception):
    """Base class for all citemetric errors."""


class EmptyKeyError(CitemetricError):
    """Journal identifier normalizes to the empty string."""


class MalformedLineError(CitemetricError):
    """Input line has the wrong shape (field count, invalid JSON, bad header)."""


class UnknownClassError(CitemetricError):
    """Citation class label outside supporting/disputing/mentioning."""


class ArithmeticOverflowError(CitemetricError):
    """A tally count left the unsigned 64-bit range; input is likely corrupt."""


class UndefinedIndexError(CitemetricError):
    """Scite index requested for a journal with zero classified citations."""


class EmptyInputError(CitemetricError):
    """Statistic requested on an empty sequence."""


class InsufficientDataError(CitemetricError):
    """Too few values for the requested statistic."""


class ZeroVarianceError(CitemetricError):
    """Statistic undefined on a constant sequence."""


class LengthMismatchError(CitemetricError):
    """Paired sequences have different lengths."""


class OutOfRangeError(CitemetricError):
    """Value outside the declared domain (e.g. histogram bounds)."""


class InvalidParamsError(CitemetricError):
    """Synthetic corpus parameters violate their constraints."""
