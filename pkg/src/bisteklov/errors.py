"""Exception types shared across the package."""


class InvalidDomainError(ValueError):
    """A shape or quadrature input fails validation."""


class PreconditionError(ValueError):
    """Inputs violate the mathematical preconditions of an operation."""


class UnsupportedRegimeError(ValueError):
    """The requested (K, H) regime admits no comparison ball."""


class NumericalRankError(RuntimeError):
    """The numerical rank of a Gram matrix collapsed to zero."""
