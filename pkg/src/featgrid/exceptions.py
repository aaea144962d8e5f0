"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when user-supplied data violates a documented precondition."""
