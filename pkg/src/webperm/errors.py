class SizeError(ValueError):
    """Raised when a request exceeds the configured enumeration cap."""


class PreconditionError(ValueError):
    """Raised when an operation is called outside its domain."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
