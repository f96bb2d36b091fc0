"""Exception types shared across the package."""


class DomainError(ValueError):
    """A documented precondition of an operation was violated."""


class GuardError(RuntimeError):
    """A desk-scale search/enumeration guard was exceeded."""
