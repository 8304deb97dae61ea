"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the domain of an operation."""


class AccuracyError(RuntimeError):
    """A numerical procedure did not reach its requested accuracy.

    The best available estimate is kept on ``estimate``.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class LevelNotFound(LookupError):
    """No bound state satisfies the request."""


class NotNormalizableError(ValueError):
    """Solution violates the exponent conditions or diverges."""


class StateError(RuntimeError):
    """A bound state is used before it is solved or normalized."""
