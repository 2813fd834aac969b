"""
Exceptions raised while scoring concepts.
"""


class RelevanceError(Exception):
    """Base class for scoring errors."""


class UnknownActivationError(RelevanceError, KeyError):
    """No activation function is registered under the given name."""

    def __str__(self):
        return str(self.args[0]) if self.args else ''


class AttributeNotInIntentError(RelevanceError, ValueError):
    """The attribute tested for relevance is not part of the intent."""


class ExtentTooLargeError(RelevanceError):
    """The extent is above the brute-force stability cap."""

    def __init__(self, message, cap):
        self.cap = cap
        super().__init__(message)


class UnknownIndexError(RelevanceError, ValueError):
    """The requested index or stability method does not exist."""
