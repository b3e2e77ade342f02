"""
The twelve acceptance criteria, exact arithmetic, each under its time budget.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion
is printed in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import dataclasses
import itertools
import sys
import time
from typing import Callable, Optional

import pytest

from webperm import actions as A
from webperm import chord as C
from webperm import gamma as Gm
from webperm import grid as G
from webperm import perms as P
from webperm import seq
from webperm.config import Caps

BIG = Caps(max_n=9, max_chords=8)

KNOWN_TILDE = {
    1: ["1"], 2: ["12"], 3: ["123"], 4: ["1234", "3412"],
    5: ["12345", "14523", "34125"],
    6: ["123456", "125634", "145236", "341256", "345612", "364512", "534612", "563412"],
}
SEIDEL_ROWS = {
    1: [1], 2: [1], 3: [1, 1], 4: [2, 1], 5: [2, 3, 3], 6: [8, 6, 3],
    7: [8, 14, 17, 17], 8: [56, 48, 34, 17], 9: [56, 104, 138, 155, 155],
}
SIGMA = (3, 4, 8, 5, 7, 10, 1, 6, 2, 9)
KNOWN_PSI = {
    (2,): (3, 4, 8, 5, 7, 10, 2, 6, 1, 9),
    (3,): (1, 6, 2, 4, 7, 10, 5, 8, 3, 9),
    (5,): (3, 4, 7, 10, 5, 8, 1, 6, 2, 9),
    (2, 3): (2, 6, 1, 4, 7, 10, 5, 8, 3, 9),
    (2, 5): (3, 4, 7, 10, 5, 8, 2, 6, 1, 9),
    (3, 5): (1, 6, 2, 4, 8, 5, 7, 10, 3, 9),
}


def cold() -> None:
    """Drop memoized enumerations so every criterion pays for its own work."""
    for fn in (G._resolve, G._first_letter_counts, C._ncd, Gm._eulerian, Gm._at_eulerian,
               Gm.delta_set, Gm.series_oracle, seq.seidel_row, seq.entringer_row):
        fn.cache_clear()


def all_perms(n):
    return P.enumerate_perms(n, Caps(unbounded=True))


class Failed(AssertionError):
    pass


def need(ok: bool, what: str) -> None:
    if not ok:
        raise Failed(what)


# -- criteria ----------------------------------------------------------------

def web3_by_resolution():
    need(sorted(G.web_set(3)) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 2, 1)], "Web_3")


def tilde_web_small():
    for n in range(1, 7):
        got = [P.format_word(p) for p in G.tilde_web(n)]
        need(got == KNOWN_TILDE[n], f"tilde web n={n}: {got}")
    need([len(KNOWN_TILDE[n]) for n in range(1, 7)] == [1, 1, 1, 2, 3, 8], "counts")


def first_letters_vs_seidel():
    for i, row in SEIDEL_ROWS.items():
        need(list(seq.seidel_row(i)) == row, f"seidel row {i}")
    need(G.f(1, 1, BIG) == 1, "f(1,1)")
    for size in range(2, 10):
        if size % 2:
            n = (size + 1) // 2
            for k in range(1, n + 1):
                need(G.f(size, 2 * k - 1, BIG) == seq.seidel(2 * n - 2, k), f"f({size},{2 * k - 1})")
        else:
            n = size // 2
            for k in range(1, n + 1):
                need(G.f(size, 2 * k - 1, BIG) == seq.seidel(2 * n - 1, n - k + 1), f"f({size},{2 * k - 1})")
    row9 = [G.f(9, k, BIG) for k in (1, 3, 5, 7)]
    need(row9 == [56, 48, 34, 17], f"f(9, odd) = {row9}")


def resolution_is_andre_cycles():
    for n in range(1, 8):
        brute = {p for p in all_perms(n) if all(P.is_andre_cycle(c) for c in P.cycles(p))}
        need(G.web_set(n) == brute, f"n={n}")


def chord_multiplicities():
    caps = Caps(max_chords=6)
    for n in range(0, 6):
        for k in range(n + 1):
            bp = C.b_plus(n, k, caps)
            if k >= 1:
                need(C.b_minus(n, k, caps) == C.b_plus(n, k - 1, caps), f"b-({n},{k})")
            if n % 2:
                m = (n + 1) // 2
                need(bp == seq.seidel(2 * m, m - k // 2), f"b+({n},{k}) odd")
            elif n >= 2:
                need(bp == seq.seidel(n + 1, k // 2 + 1), f"b+({n},{k}) even")


def first_letters_vs_chords():
    checked = 0
    for size in range(2, 10):
        if size % 2 == 0:
            n = size // 2
            for k in range(1, n + 1):
                need(G.f(size, 2 * k - 1, BIG) == C.b_plus(2 * n - 2, 2 * n - 2 * k, BIG), f"even f({size},{2 * k - 1})")
                checked += 1
        else:
            n = (size + 1) // 2
            for k in range(1, n):
                need(G.f(size, 2 * k - 1, BIG) == C.b_plus(2 * n - 3, 2 * n - 2 * k - 1, BIG), f"odd f({size},{2 * k - 1})")
                checked += 1
    need(checked == 20, f"instances {checked}")  # 10 even + 10 odd


def gamma_equals_web_drops():
    for n in range(1, 9):
        g = Gm.gamma_expand(Gm.at_eulerian(n), n)
        want = [Gm.d_web(n, i).scale(2 ** i) for i in range(len(g))]
        need(g == want, f"n={n}")
        need(Gm.gamma_reconstruct(g, n) == Gm.at_eulerian(n), f"reconstruct n={n}")


def web_delta_series_agree():
    for n in range(0, 9):
        web = Gm.fix_cyc_web(n)
        need(web == Gm.fix_cyc_delta(n), f"web vs delta n={n}")
        need(web == Gm.egf_coefficient(n, 8), f"series n={n}")


def lambda_bijection():
    need(A.lam((5, 1, 3, 6, 7, 2, 4, 8)) == (5, 8, 2, 6, 4, 7, 1, 3), "worked example")
    for n in range(1, 8):
        web = G.web_set(n)
        image = {A.lam_web(p): p for p in web}
        need(len(image) == len(web), f"injective n={n}")
        need(set(image) == set(Gm.delta_set(n)), f"onto n={n}")
        for q, p in image.items():
            need([c[0] for c in P.cycles(q)] == [c[0] for c in P.cycles(p)], f"first letters {p}")
            need(P.fix(q) == P.fix(p) and len(P.cycles(q)) == len(P.cycles(p)), f"fix/cyc {p}")
            need(P.drop(p) == P.drop_hat(q), f"drop {p}")


def actions_properties():
    for letters, want in KNOWN_PSI.items():
        need(A.bfs_psi_set(SIGMA, letters) == want, f"psi {letters}")
    for n in range(1, 7):
        words = list(all_perms(n))
        tilde = [w for w in words if not P.has_double_descent(w)]
        for w in words:
            t = A.min_max_tree(w)
            for x, y in itertools.product(w, repeat=2):
                need(A.fs_phi(A.fs_phi(w, x), x) == w, f"fs inv {w}")
                need(A.fs_phi(A.fs_phi(w, x), y) == A.fs_phi(A.fs_phi(w, y), x), f"fs comm {w}")
            for i, j in itertools.product(range(1, n + 1), repeat=2):
                need(A.hr_phi(A.hr_phi(t, i), i) == t, f"hr inv {w}")
                need(A.hr_phi(A.hr_phi(t, i), j) == A.hr_phi(A.hr_phi(t, j), i), f"hr comm {w}")
        for w in tilde:
            for x, y in itertools.product(w, repeat=2):
                need(A.bfs_psi(A.bfs_psi(w, x), x) == w, f"bfs inv {w}")
                need(A.bfs_psi(A.bfs_psi(w, x), y) == A.bfs_psi(A.bfs_psi(w, y), x), f"bfs comm {w}")
    for n in range(1, 8):
        seen: set = set()
        for w in all_perms(n):
            if P.has_double_descent(w) or w in seen:
                continue
            orbit = A.bfs_orbit(w)
            seen |= orbit
            s = P.statistics(w)
            for q in orbit:
                r = P.statistics(q)
                need((s.lrmi, s.rmida, s.des) == (r.lrmi, r.rmida, r.des), f"orbit stats {w}")
            need(sum(map(A.is_star_shaped, orbit)) == 1, f"representative {w}")


def pk_mix_equidistributed():
    for n in range(1, 9):
        need(Gm.pk_mix_check(n), f"n={n}")


def sequence_stack():
    for i, row in SEIDEL_ROWS.items():
        need(list(seq.seidel_row(i)) == row, f"seidel row {i}")
    need([seq.genocchi_first(n) for n in range(1, 6)] == [1, 1, 3, 17, 155], "genocchi")
    need([seq.genocchi_median(n) for n in range(1, 5)] == [1, 2, 8, 56], "median genocchi")
    for n in range(1, 9):
        counts = [0] * (n + 1)
        for p in G.web_set(n):
            counts[n + 1 - p[0]] += 1
        need(counts == list(seq.entringer_row(n)), f"entringer n={n}")


@dataclasses.dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    run: Callable[[], None]
    budget_s: Optional[float]


CRITERIA = [
    Criterion(1, "Web_3 from grid resolution", web3_by_resolution, 1),
    Criterion(2, "tilde web sets for n = 1..6", tilde_web_small, 5),
    Criterion(3, "first-letter counts against Seidel entries, sizes <= 9", first_letters_vs_seidel, 60),
    Criterion(4, "resolution of the identity = Andre-cycle permutations, n <= 7", resolution_is_andre_cycles, 30),
    Criterion(5, "b+/b- against Seidel entries and the shift, n <= 5", chord_multiplicities, 60),
    Criterion(6, "first-letter counts against b+, all capped instances", first_letters_vs_chords, None),
    Criterion(7, "gamma-coefficients = 2^i d(n,i), n <= 8", gamma_equals_web_drops, 60),
    Criterion(8, "Web, cycle-up-down and series agree, n <= 8", web_delta_series_agree, None),
    Criterion(9, "lambda_web bijection and its statistics, n <= 7", lambda_bijection, None),
    Criterion(10, "FS/BFS/HR involutions, orbit invariants, representatives", actions_properties, None),
    Criterion(11, "pk and mix equidistributed, n <= 8", pk_mix_equidistributed, None),
    Criterion(12, "Seidel, Genocchi and Entringer stack", sequence_stack, None),
]

RESULTS: dict[int, str] = {}


def evaluate(c: Criterion) -> tuple[bool, str]:
    cold()
    start = time.perf_counter()
    try:
        c.run()
        error = None
    except Failed as exc:
        error = str(exc)
    elapsed = time.perf_counter() - start
    ok = error is None and (c.budget_s is None or elapsed < c.budget_s)
    budget = f" < {c.budget_s:g} s" if c.budget_s is not None else ""
    line = f"{'PASS' if ok else 'FAIL'} AC{c.number:02d} {c.title} ({elapsed:.2f} s{budget})"
    if error:
        line += f" [{error}]"
    elif not ok:
        line += " [over time budget]"
    RESULTS[c.number] = line
    return ok, line


@pytest.mark.parametrize("c", CRITERIA, ids=[f"AC{c.number:02d}" for c in CRITERIA])
def test_criterion(c):
    ok, line = evaluate(c)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for c in CRITERIA:
        ok, line = evaluate(c)
        print(line, flush=True)
        failures += not ok
    sys.exit(1 if failures else 0)
