"""Exception types raised across the package."""


class SpError(Exception):
    """Base class for all spseq errors."""


class InvalidArgument(SpError, ValueError):
    """An argument is outside the accepted range (bad limit, n above the sieve)."""


class DomainError(SpError, ValueError):
    """A mathematical function is evaluated outside its domain."""


class ResourceLimitError(SpError, MemoryError):
    """A table would need more memory than the configured cap allows."""


class UndefinedFractionError(SpError, ZeroDivisionError):
    """A relative frequency was requested over an empty point set."""
