"""Web permutations, Andre permutations, chord expansions and gamma-positivity at desk scale."""
from .config import DEFAULT_CAPS, Caps
from .errors import InvariantError, PreconditionError, SizeError

__all__ = ["Caps", "DEFAULT_CAPS", "SizeError", "PreconditionError", "InvariantError"]
