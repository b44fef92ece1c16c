"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input matrix fails a structural check (shape, Hermiticity, trace, positivity)."""


class DomainError(ValueError):
    """Parameter outside the domain of a thermal construction, e.g. T <= 0."""


class UsageError(ValueError):
    """Caller asked for something the API does not offer (bad model tag, axis, preset id)."""


class NumericalError(ArithmeticError):
    """An iterative routine failed to converge or produced non-finite output."""
