from __future__ import annotations

import dataclasses

from .errors import SizeError


@dataclasses.dataclass(frozen=True)
class Caps:
    """Size limits for the exhaustive routines.

    ``max_n`` bounds permutation sizes (9! = 362880 is still cheap),
    ``max_chords`` bounds chord-diagram expansions.
    """

    max_n: int = 9
    max_chords: int = 8
    series_order: int = 12
    unbounded: bool = False

    def check_n(self, n: int, what: str = "n") -> None:
        if not self.unbounded and n > self.max_n:
            raise SizeError(f"{what}={n} exceeds cap max_n={self.max_n}")

    def check_chords(self, m: int) -> None:
        if not self.unbounded and m > self.max_chords:
            raise SizeError(f"{m} chords exceeds cap max_chords={self.max_chords}")


DEFAULT_CAPS = Caps()
