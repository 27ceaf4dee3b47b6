class FusionlimError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(FusionlimError, ValueError):
    """Input does not satisfy the preconditions of an operation."""


class CapExceeded(FusionlimError):
    """A configured size cap (group order, subgroup count, cochains) was hit."""


class ConsistencyError(FusionlimError):
    """A property that must hold mathematically failed; always a bug."""
