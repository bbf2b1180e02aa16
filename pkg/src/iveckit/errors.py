"""Exception hierarchy shared by all stages.

Exit codes: config errors map to 2, data errors to 3, numerical errors to 4.
"""


class IveckitError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class ConfigError(IveckitError):
    """Invalid configuration or parameters violating a stage precondition."""

    exit_code = 2


class DataError(IveckitError):
    """Malformed or inconsistent input data (ids, shapes, labels, files)."""

    exit_code = 3


class SplitError(DataError):
    """Corpus partitioning violates disjointness or feasibility constraints."""


class NumericalError(IveckitError):
    """Numerical failure: singular matrices, non-finite results."""

    exit_code = 4
