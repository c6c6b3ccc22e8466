"""Exception types shared across the package."""


class PiBetaError(Exception):
    """Base class for all package-specific errors."""


class DomainError(PiBetaError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class PrecisionError(DomainError):
    """The requested oracle precision is too coarse for the interval it
    is supposed to verify."""


class InternalConsistencyError(PiBetaError, RuntimeError):
    """An identity that must hold by construction failed; indicates a bug,
    never bad user input."""
