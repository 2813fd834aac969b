"""
Exceptions raised by the evaluation harness.
"""


class BenchmarkError(Exception):
    """Base class for evaluation errors."""


class SplitError(BenchmarkError, ValueError):
    """A context cannot be split with the requested parameters."""


class InsufficientDataError(BenchmarkError, ValueError):
    """Too few values for a correlation or an average."""
