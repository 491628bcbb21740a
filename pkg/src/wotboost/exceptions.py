"""Exception types raised across the package."""


class WOTBoostError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(WOTBoostError, ValueError):
    pass


class LengthMismatchError(WOTBoostError, ValueError):
    pass


class NonFiniteValueError(WOTBoostError, ValueError):
    pass


class SingleClassError(WOTBoostError, ValueError):
    pass


class SingleClassWarning(UserWarning):
    """Issued when a dataset is built with only one class present."""


class EmptyDatasetError(WOTBoostError, ValueError):
    pass


class TooFewSamplesError(WOTBoostError, ValueError):
    pass


class NotEnoughNeighborsError(WOTBoostError, ValueError):
    pass


class AllZeroWeightsError(WOTBoostError, ValueError):
    pass


class DegenerateNormalizerError(WOTBoostError, ArithmeticError):
    pass


class EmptyEnsembleError(WOTBoostError, ValueError):
    pass


class ParseError(WOTBoostError, ValueError):
    """A CSV cell could not be parsed; carries the 1-based row and column."""

    def __init__(self, message, row=None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class UnknownLabelValueError(WOTBoostError, ValueError):
    pass


class InvertedClassesError(WOTBoostError, ValueError):
    pass


class ConfigError(WOTBoostError, ValueError):
    pass
