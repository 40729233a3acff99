"""Exception hierarchy for qrotor."""


class QRotorError(Exception):
    """Base class for all qrotor errors."""


class DomainError(QRotorError, ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class UnsupportedRegimeError(DomainError):
    """The requested deformation regime is not supported by an operation."""


class DataError(QRotorError, ValueError):
    """Input data is incomplete, malformed or physically inconsistent."""


class SeriesRangeError(QRotorError, ValueError):
    """A series is requested beyond its supported length or validity radius."""
