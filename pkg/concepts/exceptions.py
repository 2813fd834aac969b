"""
Exceptions raised by the concepts app.
"""


class ConceptsError(Exception):
    """Base class for context, lattice and generator errors."""


class ContextFormatError(ConceptsError, ValueError):
    """A context file or table could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class ContextMismatchError(ConceptsError, ValueError):
    """Sets or lattices from incompatible universes were combined."""


class ResourceCapExceeded(ConceptsError):
    """A configured size cap was hit while building a structure."""

    def __init__(self, message, cap):
        self.cap = cap
        super().__init__(message)


class OracleTooLarge(ConceptsError):
    """The input is too large for an exhaustive oracle."""


class UnknownConceptError(ConceptsError, LookupError):
    """A concept id does not belong to the lattice."""


class NotAnUpperCoverError(ConceptsError, ValueError):
    """The second concept is not an upper cover of the first."""


class NotASubsetError(ConceptsError, ValueError):
    """A candidate generator is not contained in the intent."""
