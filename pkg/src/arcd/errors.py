"""Exception types raised by the library.

Monte Carlo drivers need to tell a structurally bad input (a bug) from a
degenerate random draw (discardable), so degeneracy gets its own type.
"""


class ArcdError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateSeriesError(ArcdError):
    """A sum of squares in an estimator denominator is exactly zero."""


class ParameterDomainError(ArcdError, ValueError):
    """A parameter lies outside the domain of the requested formula."""


class GridError(ArcdError, ValueError):
    """An evaluation grid violates its construction invariants."""


class LevelUnreachableError(ArcdError):
    """A confidence distribution never attains the requested level on the grid."""


class NoCrossingError(ArcdError):
    """A confidence distribution does not cross 1/2 on the grid."""


class InsufficientPointsError(ArcdError):
    """Too few usable grid points for the probit regression fit."""


class SeriesFormatError(ArcdError, ValueError):
    """An input file could not be parsed into a numeric series."""
