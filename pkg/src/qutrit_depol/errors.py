"""Exception types raised across the package."""


class QutritError(ValueError):
    """Base class for all errors raised by :mod:`qutrit_depol`."""


class NotSquare(QutritError):
    pass


class NotHermitian(QutritError):
    pass


class DimensionMismatch(QutritError):
    pass


class AlphaOutOfRange(QutritError):
    pass


class ParameterOutOfRange(QutritError):
    pass


class IncompleteKrausSet(QutritError):
    pass


class UnsupportedTopology(QutritError):
    pass


class InvalidAxis(QutritError):
    pass
