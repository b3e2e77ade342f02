"""
Permutations and words of distinct positive integers.

Words and permutations are plain tuples in one-line notation, 1-indexed by
value: the permutation sending i to p[i-1]. Cycle decompositions are tuples
of tuples, each cycle written with its minimum first and cycles sorted by
their minima.

Statistics that talk about double ascents, double descents, peaks and
valleys use the boundary convention p[0] = p[n+1] = +infinity. Left-to-right
and right-to-left minima use no sentinels.
"""
from __future__ import annotations

import dataclasses
import itertools
import math
from typing import Iterator, Sequence

from .config import DEFAULT_CAPS, Caps
from .errors import PreconditionError

Word = tuple[int, ...]
Cycles = tuple[tuple[int, ...], ...]

INF = math.inf


def is_permutation(word: Sequence[int]) -> bool:
    """
    >>> [is_permutation(w) for w in [(), (1,), (2, 1), (1, 3), (1, 1)]]
    [True, True, True, False, False]
    """
    return sorted(word) == list(range(1, len(word) + 1))


def identity(n: int) -> Word:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Word:
    return tuple(range(n, 0, -1))


def inverse(p: Sequence[int]) -> Word:
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def swap_positions(p: Sequence[int], i: int, j: int) -> Word:
    """The product p * t_{i,j}: exchange the letters in positions i and j (1-based)."""
    q = list(p)
    q[i - 1], q[j - 1] = q[j - 1], q[i - 1]
    return tuple(q)


def enumerate_perms(n: int, caps: Caps = DEFAULT_CAPS) -> Iterator[Word]:
    """All permutations of [n] in lexicographic order."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    caps.check_n(n)
    return itertools.permutations(range(1, n + 1))


def standardize(word: Sequence[int]) -> Word:
    """Replace the letters of ``word`` by 1..n keeping their relative order."""
    rank = {v: r for r, v in enumerate(sorted(word), start=1)}
    return tuple(rank[v] for v in word)


# -- cycles ---------------------------------------------------------------

def rotate_min_first(cycle: Sequence[int]) -> Word:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def cycles(p: Sequence[int]) -> Cycles:
    """
    Canonical cycle decomposition.

    >>> cycles((3, 1, 2, 5, 4))
    ((1, 3, 2), (4, 5))
    """
    seen = [False] * (len(p) + 1)
    out = []
    for start in range(1, len(p) + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x - 1]
        out.append(tuple(cyc))
    return tuple(out)


def from_cycles(cycle_list: Sequence[Sequence[int]], n: int | None = None) -> Word:
    """Build a permutation from disjoint cycles; (a1, a2, ..., ak) sends a1 to a2."""
    if n is None:
        n = sum(len(c) for c in cycle_list)
    p = list(range(1, n + 1))
    seen = set()
    for c in cycle_list:
        for a, b in zip(c, tuple(c[1:]) + (c[0],)):
            if a in seen or not 1 <= a <= n:
                raise PreconditionError(f"cycles are not a partition of [{n}]")
            seen.add(a)
            p[a - 1] = b
    return tuple(p)


# -- statistics -----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class StatRecord:
    des: int
    drop: int
    fix: int
    cyc: int
    lmi: int
    rmi: int
    lmidd: int
    rmida: int
    pk: int
    valley_count: int

    @property
    def lrmi(self) -> int:
        return self.lmi + self.rmi - 2


def _padded(w: Sequence[int]) -> list:
    return [INF, *w, INF]


def descents(w: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def des(w: Sequence[int]) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


def drop(p: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(p, start=1) if i > v)


def fix(p: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(p, start=1) if i == v)


def left_to_right_minima(w: Sequence[int]) -> list[int]:
    """Positions (0-based) of the left-to-right minima of ``w``."""
    out, cur = [], INF
    for i, v in enumerate(w):
        if v < cur:
            out.append(i)
            cur = v
    return out


def right_to_left_minima(w: Sequence[int]) -> list[int]:
    """Positions (0-based, increasing) of the right-to-left minima of ``w``."""
    out, cur = [], INF
    for i in range(len(w) - 1, -1, -1):
        if w[i] < cur:
            out.append(i)
            cur = w[i]
    return out[::-1]


def _shape(w: Sequence[int], i: int) -> str:
    """Classify position i (0-based) as 'dd', 'da', 'pk' or 'val'."""
    q = _padded(w)
    a, b, c = q[i], q[i + 1], q[i + 2]
    if a > b > c:
        return "dd"
    if a < b < c:
        return "da"
    if a < b > c:
        return "pk"
    return "val"


def double_descents(w: Sequence[int]) -> list[int]:
    return [i for i in range(len(w)) if _shape(w, i) == "dd"]


def double_ascents(w: Sequence[int]) -> list[int]:
    return [i for i in range(len(w)) if _shape(w, i) == "da"]


def peaks(w: Sequence[int]) -> list[int]:
    return [i for i in range(len(w)) if _shape(w, i) == "pk"]


def valleys(w: Sequence[int]) -> list[int]:
    return [i for i in range(len(w)) if _shape(w, i) == "val"]


def pk(w: Sequence[int]) -> int:
    return len(peaks(w))


def has_double_descent(w: Sequence[int]) -> bool:
    return bool(double_descents(w))


def statistics(p: Sequence[int]) -> StatRecord:
    if len(p) < 1:
        raise PreconditionError("statistics needs n >= 1")
    shapes = [_shape(p, i) for i in range(len(p))]
    lmi = left_to_right_minima(p)
    rmi = right_to_left_minima(p)
    return StatRecord(
        des=des(p),
        drop=drop(p),
        fix=fix(p),
        cyc=len(cycles(p)),
        lmi=len(lmi),
        rmi=len(rmi),
        lmidd=sum(1 for i in lmi if shapes[i] == "dd"),
        rmida=sum(1 for i in rmi if shapes[i] == "da"),
        pk=shapes.count("pk"),
        valley_count=shapes.count("val"),
    )


# -- membership predicates -------------------------------------------------

def is_up_down(w: Sequence[int]) -> bool:
    """w1 < w2 > w3 < ... ; words of length 0 and 1 qualify."""
    return all((a < b) == (i % 2 == 0) for i, (a, b) in enumerate(zip(w, w[1:])))


def is_andre(w: Sequence[int]) -> bool:
    """Andre permutation of the first kind, by the recursive min-split."""
    if len(w) <= 1:
        return True
    k = w.index(min(w))
    if max(w[k:]) != max(w):
        return False
    return is_andre(w[:k]) and is_andre(w[k + 1:])


def high_run_bounds(w: Sequence[int], pos: int) -> tuple[int, int]:
    """
    For the letter x = w[pos], the slice bounds (lo, hi) with w[lo:pos] the
    maximal run of letters > x ending just left of x and w[pos+1:hi] the
    maximal run of letters > x starting just right of x.
    """
    x = w[pos]
    lo = pos
    while lo > 0 and w[lo - 1] > x:
        lo -= 1
    hi = pos + 1
    while hi < len(w) and w[hi] > x:
        hi += 1
    return lo, hi


def is_andre_xfact(w: Sequence[int]) -> bool:
    """Andre test via x-factorizations: max(w2 x) <= max(x w3) for every x."""
    for pos, x in enumerate(w):
        lo, hi = high_run_bounds(w, pos)
        if max(w[lo:pos + 1]) > max(w[pos:hi]):
            return False
    return True


def is_andre_cycle(cycle: Sequence[int]) -> bool:
    if not cycle:
        raise PreconditionError("empty cycle")
    return is_andre(rotate_min_first(cycle)[1:])


def is_web(p: Sequence[int]) -> bool:
    return all(is_andre_cycle(c) for c in cycles(p))


def is_cycle_up_down(p: Sequence[int]) -> bool:
    return all(is_up_down(c) for c in cycles(p))


def mix(w: Sequence[int]) -> int:
    """
    Recursive split at the earliest position holding the min or the max.

    >>> mix((5, 8, 2, 6, 4, 7, 1, 3))
    2
    """
    n = len(w)
    if n <= 1:
        return 0
    lo, hi = min(w), max(w)
    j = next(i for i, v in enumerate(w) if v == lo or v == hi)
    return mix(w[:j]) + mix(w[j + 1:]) + (1 if 0 < j < n - 1 else 0)


def drop_hat(p: Sequence[int]) -> int:
    return sum(mix(c) + (len(c) > 1) for c in cycles(p))


def format_word(w: Sequence[int]) -> str:
    """One-line notation; letters are space separated once any exceeds 9."""
    if any(v > 9 for v in w):
        return " ".join(map(str, w))
    return "".join(map(str, w))


def parse_word(s: str) -> Word:
    s = s.strip()
    if not s:
        return ()
    if any(ch in s for ch in " ,"):
        return tuple(int(t) for t in s.replace(",", " ").split())
    return tuple(int(ch) for ch in s)
