"""Exception hierarchy.

Two branches matter for callers: :class:`DataError` covers bad inputs
(validation, parsing, missing datasets) and :class:`NumericalError` covers
failures of the math itself (singular systems, degenerate regressions).
The CLI maps them to exit codes 1 and 2 respectively.
"""


class RssifitError(Exception):
    """Base class for all errors raised by this package."""


class DataError(RssifitError, ValueError):
    """Invalid input data or parameters."""


class InsufficientDataError(DataError):
    """Too few rows, samples, or degrees of freedom for the operation."""


class DatasetNotFoundError(DataError):
    """Unknown embedded dataset name."""


class FormatError(DataError):
    """Malformed CSV or JSON document; message carries the location."""


class NumericalError(RssifitError, ArithmeticError):
    """The computation itself failed."""


class SingularMatrixError(NumericalError):
    """Zero pivot after row pivoting: the system is exactly singular."""


class DegenerateDataError(NumericalError):
    """Data admits no unique fit (constant abscissae, constant column)."""
