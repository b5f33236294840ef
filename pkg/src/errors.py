"""
Exception hierarchy shared by the sieve, summation and analysis layers.
"""


class KempnerError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(KempnerError, ValueError):
    """An operation was called outside its documented domain."""


class DomainError(PreconditionError):
    """A mathematical function was evaluated where it is undefined."""


class ResourceError(KempnerError):
    """A request exceeds the configured memory budget."""


class CapacityError(ResourceError):
    """Exact accumulators could overflow for the requested configuration."""


class InvariantViolation(KempnerError):
    """A checked invariant failed; results must not be trusted."""
