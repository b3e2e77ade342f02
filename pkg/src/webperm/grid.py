"""
Grid configurations and the resolution of crossings.

A configuration G(sigma, E) lives on an n x n board. Cell (i, j) is named by
the coordinates of its upper-right corner, so i is a position (column) and j
a value (row). sigma puts an X in cell (i, sigma_i); from every X a line runs
left to the boundary and another runs up. A cell carrying both lines is a
crossing, and the cells of E are crossings that have been replaced by an
elbow. Only (sigma, E) is stored; cell contents are recomputed from the
closed-form rules.
"""
from __future__ import annotations

import dataclasses
import enum
import functools
from typing import Callable, Iterable, Sequence

from .config import DEFAULT_CAPS, Caps
from .errors import InvariantError, PreconditionError
from .perms import Word, identity, inverse, is_web, swap_positions

Cell = tuple[int, int]
Matching = tuple[tuple[int, int], ...]


class Content(enum.Enum):
    BLANK = " "
    X = "x"
    HORIZONTAL = "-"
    VERTICAL = "|"
    CROSSING = "+"
    ELBOW = "~"


def crossings(p: Sequence[int]) -> frozenset[Cell]:
    """Cr(p): cells (i, j) with i < p^{-1}(j) and j > p_i."""
    n = len(p)
    inv = inverse(p)
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(p[i - 1] + 1, n + 1)
        if i < inv[j - 1]
    )


@dataclasses.dataclass(frozen=True)
class GridConfiguration:
    sigma: Word
    resolved: frozenset[Cell] = frozenset()

    def __post_init__(self):
        if not self.resolved <= crossings(self.sigma):
            raise PreconditionError("resolved cells must be crossings of sigma")

    @property
    def n(self) -> int:
        return len(self.sigma)

    @functools.cached_property
    def inverse(self) -> Word:
        return inverse(self.sigma)

    def content(self, i: int, j: int) -> Content:
        sigma = self.sigma
        if sigma[i - 1] == j:
            return Content.X
        horizontal = i < self.inverse[j - 1]
        vertical = j > sigma[i - 1]
        if horizontal and vertical:
            return Content.ELBOW if (i, j) in self.resolved else Content.CROSSING
        if horizontal:
            return Content.HORIZONTAL
        if vertical:
            return Content.VERTICAL
        return Content.BLANK

    def unresolved(self) -> frozenset[Cell]:
        return crossings(self.sigma) - self.resolved

    def render(self) -> str:
        rows = []
        for j in range(self.n, 0, -1):
            rows.append("".join(self.content(i, j).value for i in range(1, self.n + 1)))
        return "\n".join(rows)


def dominates(c: Cell, d: Cell) -> bool:
    """c is weakly northwest of d."""
    return c[0] <= d[0] and c[1] >= d[1]


def _maximal(cells: Iterable[Cell]) -> frozenset[Cell]:
    cells = list(cells)
    return frozenset(
        c for c in cells if not any(d != c and dominates(d, c) for d in cells)
    )


def maximal_crossings(g: GridConfiguration) -> frozenset[Cell]:
    return _maximal(g.unresolved())


def _check_resolvable(g: GridConfiguration, c: Cell) -> None:
    if c not in maximal_crossings(g):
        raise PreconditionError(f"{c} is not a maximal crossing")
    if any(e != c and dominates(c, e) for e in g.resolved):
        raise PreconditionError(f"a resolved cell lies below {c}")


def smooth(g: GridConfiguration, c: Cell) -> GridConfiguration:
    _check_resolvable(g, c)
    return GridConfiguration(g.sigma, g.resolved | {c})


def switch(g: GridConfiguration, c: Cell) -> GridConfiguration:
    _check_resolvable(g, c)
    i, j = c
    ell = g.inverse[j - 1]
    sigma2 = swap_positions(g.sigma, i, ell)
    if not g.resolved <= crossings(sigma2):
        raise InvariantError("switching lost a resolved crossing")
    return GridConfiguration(sigma2, g.resolved)


Strategy = Callable[[frozenset[Cell]], Cell]


def first_maximal(cells: frozenset[Cell]) -> Cell:
    """Smallest maximal crossing under the key (i, -j)."""
    return min(cells, key=lambda c: (c[0], -c[1]))


def last_maximal(cells: frozenset[Cell]) -> Cell:
    return max(cells, key=lambda c: (c[0], -c[1]))


def resolve_leaves(p: Sequence[int], strategy: Strategy = first_maximal) -> list[Word]:
    """Leaves of the resolution tree from G(p, {}), with repetition if any."""
    out: list[Word] = []
    stack = [GridConfiguration(tuple(p))]
    while stack:
        g = stack.pop()
        cand = maximal_crossings(g)
        if not cand:
            out.append(g.sigma)
            continue
        c = strategy(cand)
        stack.append(switch(g, c))
        stack.append(smooth(g, c))
    return out


@functools.lru_cache(maxsize=None)
def _resolve(p: Word, strategy: Strategy) -> frozenset[Word]:
    leaves = resolve_leaves(p, strategy)
    result = frozenset(leaves)
    if len(result) != len(leaves):
        raise InvariantError(f"resolution of {p} produced a repeated web permutation")
    return result


def resolve(
    p: Sequence[int], strategy: Strategy = first_maximal, caps: Caps = DEFAULT_CAPS
) -> frozenset[Word]:
    """The web permutations from p; for the identity this is Web_n."""
    caps.check_n(len(p))
    return _resolve(tuple(p), strategy)


web_from = resolve


def web_set(n: int, caps: Caps = DEFAULT_CAPS) -> frozenset[Word]:
    return resolve(identity(n), caps=caps)


# -- matchings --------------------------------------------------------------

# keyed by Content.value: enum hashing dominates the tracing loop otherwise
_TURN = {
    Content.X.value: {"W": "N", "N": "W"},
    Content.ELBOW.value: {"W": "S", "S": "W", "N": "E", "E": "N"},
    Content.HORIZONTAL.value: {"W": "E", "E": "W"},
    Content.VERTICAL.value: {"N": "S", "S": "N"},
}
_STEP = {"E": (1, 0, "W"), "W": (-1, 0, "E"), "N": (0, 1, "S"), "S": (0, -1, "N")}


def trace_matching(g: GridConfiguration) -> Matching:
    """Follow every strand of a crossing-free configuration between boundary labels."""
    n = g.n
    if g.unresolved():
        raise PreconditionError("configuration still has crossings")

    def exit_label(i: int, j: int, side: str) -> int | None:
        if side == "W" and i == 1:
            return j - 1
        if side == "N" and j == n:
            return n + i - 1
        return None

    def follow(i: int, j: int, entry: str) -> int:
        for _ in range(4 * n * n + 4):
            turns = _TURN.get(g.content(i, j).value)
            if turns is None or entry not in turns:
                raise InvariantError(f"strand stuck in cell {(i, j)}")
            side = turns[entry]
            label = exit_label(i, j, side)
            if label is not None:
                return label
            di, dj, entry = _STEP[side]
            i, j = i + di, j + dj
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvariantError("strand left through the bottom or right boundary")
        raise InvariantError("strand does not terminate")

    starts = [(r, 1, r + 1, "W") for r in range(n)]
    starts += [(n + c - 1, c, n, "N") for c in range(1, n + 1)]
    partner: dict[int, int] = {}
    for label, i, j, entry in starts:
        if label in partner:
            continue
        other = follow(i, j, entry)
        if other in partner or other == label:
            raise InvariantError("strand tracing is not a perfect matching")
        partner[label], partner[other] = other, label
    return tuple(sorted((a, b) for a, b in partner.items() if a < b))


def matching(p: Sequence[int]) -> Matching:
    """
    M(p) for a web permutation p, read off G(p, Cr(p)).

    >>> matching((1, 3, 2, 4))
    ((0, 1), (2, 5), (3, 4), (6, 7))
    """
    p = tuple(p)
    if not is_web(p):
        raise PreconditionError(f"{p} is not a web permutation")
    return resolved_matching(p)


def resolved_matching(p: Sequence[int]) -> Matching:
    """Matching of G(p, Cr(p)) for any p, e.g. a web permutation from some pi."""
    p = tuple(p)
    return trace_matching(GridConfiguration(p, crossings(p)))


def base_matching(n: int) -> Matching:
    """The matching {0,1},{2,3},...,{2n-2,2n-1}."""
    return tuple((2 * i, 2 * i + 1) for i in range(n))


def tilde_web(n: int, caps: Caps = DEFAULT_CAPS) -> list[Word]:
    """Web permutations of [n] whose matching is the base matching, sorted."""
    m0 = base_matching(n)
    return sorted(s for s in web_set(n, caps) if matching(s) == m0)


@functools.lru_cache(maxsize=None)
def _first_letter_counts(n: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for s in tilde_web(n, Caps(unbounded=True)):
        counts[s[0]] = counts.get(s[0], 0) + 1
    return counts


def f(n: int, k: int, caps: Caps = DEFAULT_CAPS) -> int:
    if not 1 <= k <= n:
        raise PreconditionError("need 1 <= k <= n")
    caps.check_n(n)
    return _first_letter_counts(n).get(k, 0)


def h(p: Sequence[int], caps: Caps = DEFAULT_CAPS) -> int:
    m0 = base_matching(len(p))
    return sum(1 for s in resolve(p, caps=caps) if resolved_matching(s) == m0)


def p_transform(p: Sequence[int], k: int) -> Word:
    """
    Move the first letter of p to position k.

    >>> p_transform((1, 2, 3, 4, 5, 6), 4)
    (2, 3, 4, 1, 5, 6)
    """
    if not 1 <= k <= len(p):
        raise PreconditionError("need 1 <= k <= n")
    p = tuple(p)
    return p[1:k] + p[:1] + p[k:]
