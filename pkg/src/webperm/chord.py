"""
Chord diagrams on 2m points of a circle and their expansion into
nonintersecting diagrams.

Points are labelled 0..2m-1 counterclockwise. A diagram is stored in
canonical form: a sorted tuple of chords (a, b) with a < b.
"""
from __future__ import annotations

import functools
import itertools
from collections import Counter
from typing import Callable, Iterable, Sequence

from .config import DEFAULT_CAPS, Caps
from .errors import InvariantError, PreconditionError

Chord = tuple[int, int]
Diagram = tuple[Chord, ...]


def chord(a: int, b: int) -> Chord:
    return (a, b) if a < b else (b, a)


def canonical(chords: Iterable[Sequence[int]]) -> Diagram:
    d = tuple(sorted(chord(*c) for c in chords))
    ends = [v for c in d for v in c]
    if len(set(ends)) != len(ends):
        raise PreconditionError("chords share an end vertex")
    return d


def crosses(c1: Sequence[int], c2: Sequence[int]) -> bool:
    """Exactly one end of c2 lies strictly between the ends of c1."""
    a, b = sorted(c1)
    if set(c1) & set(c2):
        raise PreconditionError("chords share an end vertex")
    return (a < c2[0] < b) != (a < c2[1] < b)


def crossing_pairs(d: Diagram) -> list[tuple[Chord, Chord]]:
    return [(c1, c2) for c1, c2 in itertools.combinations(d, 2) if crosses(c1, c2)]


def crossing_number(d: Diagram) -> int:
    return len(crossing_pairs(d))


def is_nonintersecting(d: Diagram) -> bool:
    return not crossing_pairs(d)


def expand(d: Diagram, s: tuple[Chord, Chord]) -> tuple[Diagram, Diagram]:
    """
    The two expansions of d with respect to the crossing s.

    For chords {a,c}, {b,d} with a < b < c < d the four ends read clockwise
    are x1, x2, x3, x4 = d, c, b, a; the first expansion uses x1x2, x3x4 and
    the second x2x3, x4x1.

    >>> expand(((0, 2), (1, 3)), ((0, 2), (1, 3)))
    (((0, 1), (2, 3)), ((0, 3), (1, 2)))
    """
    c1, c2 = (chord(*c) for c in s)
    if c1 not in d or c2 not in d:
        raise PreconditionError("s is not a pair of chords of d")
    if not crosses(c1, c2):
        raise PreconditionError("s is not a crossing")
    a, b, c, dd = sorted(c1 + c2)
    x1, x2, x3, x4 = dd, c, b, a
    rest = [e for e in d if e not in (c1, c2)]
    e1 = canonical(rest + [(x1, x2), (x3, x4)])
    e2 = canonical(rest + [(x2, x3), (x4, x1)])
    return e1, e2


CrossingChoice = Callable[[list[tuple[Chord, Chord]]], tuple[Chord, Chord]]


def first_crossing(pairs):
    return pairs[0]


def last_crossing(pairs):
    return pairs[-1]


@functools.lru_cache(maxsize=None)
def _ncd(d: Diagram, choose: CrossingChoice) -> tuple[tuple[Diagram, int], ...]:
    pairs = crossing_pairs(d)
    if not pairs:
        return ((d, 1),)
    total: Counter = Counter()
    for child in expand(d, choose(pairs)):
        # every expansion strictly lowers the crossing number, so this terminates
        if crossing_number(child) >= len(pairs):
            raise InvariantError("expansion did not reduce the crossing number")
        total.update(dict(_ncd(child, choose)))
    return tuple(sorted(total.items()))


def ncd(
    d: Iterable[Sequence[int]],
    choose: CrossingChoice = first_crossing,
    caps: Caps = DEFAULT_CAPS,
) -> dict[Diagram, int]:
    """Multiset of nonintersecting leaves of the full expansion tree."""
    d = canonical(d)
    caps.check_chords(len(d))
    return dict(_ncd(d, choose))


def ncd_brute(d: Iterable[Sequence[int]], choose: CrossingChoice = first_crossing) -> Counter:
    """Same multiset by walking every branch of the expansion tree, no caching."""
    out: Counter = Counter()
    stack = [canonical(d)]
    while stack:
        e = stack.pop()
        pairs = crossing_pairs(e)
        if not pairs:
            out[e] += 1
        else:
            stack.extend(expand(e, choose(pairs)))
    return out


def a_diagram(n: int, k: int) -> Diagram:
    """
    An n-crossing plus one extra chord that crosses exactly k of its chords.

    Points v_0..v_{2n+1}; the extra chord is v_0 v_{k+1} and the remaining 2n
    points, taken in circular order, are paired opposite each other.
    """
    if not 0 <= k <= n:
        raise PreconditionError("need 0 <= k <= n")
    rest = [v for v in range(1, 2 * n + 2) if v != k + 1]
    d = canonical([(0, k + 1)] + [(rest[i], rest[i + n]) for i in range(n)])
    extra = chord(0, k + 1)
    others = [c for c in d if c != extra]
    if not all(crosses(a, b) for a, b in itertools.combinations(others, 2)):
        raise InvariantError("base chords do not form an n-crossing")
    if sum(crosses(extra, c) for c in others) != k:
        raise InvariantError("extra chord has the wrong number of crossings")
    return d


def is_ear(c: Chord, m: int) -> bool:
    a, b = c
    return b - a == 1 or (a == 0 and b == 2 * m - 1)


def is_necklace(d: Diagram) -> bool:
    m = len(d)
    return is_nonintersecting(d) and all(is_ear(c, m) for c in d)


def necklace_with_ear(m: int, v: int) -> Diagram:
    """The m-necklace on 2m points containing the ear {v, v+1} (indices mod 2m)."""
    v %= 2 * m
    if v % 2 == 0:
        return canonical((2 * i, 2 * i + 1) for i in range(m))
    return canonical((2 * i + 1, (2 * i + 2) % (2 * m)) for i in range(m))


def multiplicity(e: Diagram, f_: Diagram, caps: Caps = DEFAULT_CAPS) -> int:
    return ncd(e, caps=caps).get(canonical(f_), 0)


def b_plus(n: int, k: int, caps: Caps = DEFAULT_CAPS) -> int:
    """Multiplicity of the necklace with ear v_k v_{k+1} in the expansion of A(n, k)."""
    return multiplicity(a_diagram(n, k), necklace_with_ear(n + 1, k), caps)


def b_minus(n: int, k: int, caps: Caps = DEFAULT_CAPS) -> int:
    """Multiplicity of the necklace with ear v_{k+1} v_{k+2} in the expansion of A(n, k)."""
    return multiplicity(a_diagram(n, k), necklace_with_ear(n + 1, k + 1), caps)


def all_diagrams(m: int) -> Iterable[Diagram]:
    """Every perfect matching of 0..2m-1, canonical form."""
    def rec(points):
        if not points:
            yield ()
            return
        a = points[0]
        for idx in range(1, len(points)):
            b = points[idx]
            for tail in rec(points[1:idx] + points[idx + 1:]):
                yield ((a, b),) + tail
    for d in rec(list(range(2 * m))):
        yield canonical(d)
