"""
Named verification suites. Each suite is a generator of checks
(id, passed, witness) and ``run_suite`` wraps them in a report.
"""
from __future__ import annotations

import dataclasses
import itertools
import json
import time
from typing import Callable, Iterator, Optional

from . import actions, chord, gamma, grid, perms, seq
from .config import Caps

Check = tuple[str, bool, Optional[str]]
SuiteFn = Callable[[int, int], Iterator[Check]]

KNOWN_TILDE_WEB = {
    1: ["1"],
    2: ["12"],
    3: ["123"],
    4: ["1234", "3412"],
    5: ["12345", "14523", "34125"],
    6: ["123456", "125634", "145236", "341256", "345612", "364512", "534612", "563412"],
}

KNOWN_SEIDEL_ROWS = {
    1: [1], 2: [1], 3: [1, 1], 4: [2, 1], 5: [2, 3, 3], 6: [8, 6, 3],
    7: [8, 14, 17, 17], 8: [56, 48, 34, 17], 9: [56, 104, 138, 155, 155],
}

# the worked block-action example: sigma = 3 4 8 5 7 10 | 1 | 6 2 | 9
BFS_EXAMPLE = (3, 4, 8, 5, 7, 10, 1, 6, 2, 9)
BFS_EXAMPLE_VALUES = {
    (2,): (3, 4, 8, 5, 7, 10, 2, 6, 1, 9),
    (3,): (1, 6, 2, 4, 7, 10, 5, 8, 3, 9),
    (5,): (3, 4, 7, 10, 5, 8, 1, 6, 2, 9),
    (2, 3): (2, 6, 1, 4, 7, 10, 5, 8, 3, 9),
    (2, 5): (3, 4, 7, 10, 5, 8, 2, 6, 1, 9),
    (3, 5): (1, 6, 2, 4, 8, 5, 7, 10, 3, 9),
    (2, 3, 5): (2, 6, 1, 4, 8, 5, 7, 10, 3, 9),
}


def _eq(cid: str, got, want) -> Check:
    ok = got == want
    return cid, ok, None if ok else f"got {got}, expected {want}"


def _all(cid: str, items, pred) -> Check:
    """Pass iff pred holds on every item; the witness is the first failure."""
    for item in items:
        if not pred(item):
            return cid, False, repr(item)
    return cid, True, None


def _caps(max_n: int) -> Caps:
    return Caps(max_n=max_n, unbounded=True)


def _perms(n: int):
    return perms.enumerate_perms(n, Caps(unbounded=True))


# -- suites ------------------------------------------------------------------

def suite_first_letters(max_n: int, max_chords: int) -> Iterator[Check]:
    caps = _caps(max_n)
    yield _eq("web3", sorted(grid.web_set(3, caps)), [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 2, 1)])
    for n in range(1, min(max_n, 6) + 1):
        got = [perms.format_word(p) for p in grid.tilde_web(n, caps)]
        yield _eq(f"tilde_web.known.n{n}", got, KNOWN_TILDE_WEB[n])
    for n in range(1, min(max_n, 7) + 1):
        brute = frozenset(p for p in _perms(n) if perms.is_web(p))
        yield _eq(f"web.resolution_is_andre_cycles.n{n}", grid.web_set(n, caps), brute)
    for i in range(1, 10):
        yield _eq(f"seidel.known.row{i}", list(seq.seidel_row(i)), KNOWN_SEIDEL_ROWS[i])
    # size 1 would need s_{0,1}, which lies outside the triangle
    yield _eq("first_letter.f(1,1)", grid.f(1, 1, caps), 1)
    for m in range(2, max_n + 1):
        if m % 2:
            n = (m + 1) // 2
            for k in range(1, n + 1):
                yield _eq(f"first_letter.seidel.odd.f({m},{2 * k - 1})", grid.f(m, 2 * k - 1, caps), seq.seidel(m - 1, k))
        else:
            n = m // 2
            for k in range(1, n + 1):
                yield _eq(f"first_letter.seidel.even.f({m},{2 * k - 1})", grid.f(m, 2 * k - 1, caps), seq.seidel(m - 1, n - k + 1))
        zeros = [grid.f(m, k, caps) for k in range(2, m + 1, 2)] + [grid.f(m, m, caps)]
        yield _eq(f"f.zeros.n{m}", set(zeros) - {0}, set())


def suite_gamma_xz(max_n: int, max_chords: int) -> Iterator[Check]:
    caps = _caps(max_n)
    for n in range(1, max_n + 1):
        g = gamma.gamma_expand(gamma.at_eulerian(n, caps), n)
        want = [gamma.d_web(n, i, caps).scale(2 ** i) for i in range(len(g))]
        yield _eq(f"gamma.web_drops.n{n}", [str(p) for p in g], [str(p) for p in want])
        yield _all(f"gamma.positive.n{n}", g, lambda p: p.is_nonnegative())
        yield _eq(f"eulerian.specialize.n{n}", gamma.at_eulerian(n, caps).subs(t=1, alpha=1), gamma.eulerian(n, caps))
        yield _eq(
            f"d.andre.n{n}",
            [gamma.d_web(n, i, caps).subs(t=1, alpha=1).value() for i in range(len(g))],
            [gamma.d_andre(n, i, caps) for i in range(len(g))],
        )
    for n in range(1, min(max_n, 7) + 1):
        lhs, rhs = bfs_orbit_sums(n)
        yield _eq(f"bfs.orbit_sum.n{n}", lhs, rhs)


def bfs_orbit_sums(n: int) -> tuple[dict, dict]:
    """Both sides of the orbit-sum identity, keyed by descent number."""
    lhs: dict = {}
    rhs: dict = {}
    for p in _perms(n):
        if perms.has_double_descent(p):
            continue
        s = perms.statistics(p)
        key = (s.des, s.rmida, s.lrmi)
        lhs[key] = lhs.get(key, 0) + 1
        if actions.is_star_shaped(p):
            key = (s.des, s.rmida, s.rmi - 1)
            rhs[key] = rhs.get(key, 0) + 2 ** s.des
    return lhs, rhs


def suite_equidist(max_n: int, max_chords: int) -> Iterator[Check]:
    caps = _caps(max_n)
    for n in range(0, max_n + 1):
        yield _eq(f"fix_cyc.web_delta.n{n}", gamma.fix_cyc_web(n, caps), gamma.fix_cyc_delta(n, caps))
    for n in range(1, max_n + 1):
        for i in range((n - 1) // 2 + 1):
            yield _eq(f"d.web_delta.n{n}.i{i}", gamma.d_web(n, i, caps), gamma.d_delta(n, i, caps))
    for n in range(1, max_n + 1):
        counts = [0] * (n + 1)
        for p in grid.web_set(n, caps):
            counts[n + 1 - p[0]] += 1
        yield _eq(f"entringer.web.n{n}", counts, list(seq.entringer_row(n)))
        yield _eq(f"web.count.n{n}", len(grid.web_set(n, caps)), seq.euler_number(n + 1))
        yield _eq(f"euler.updown.n{n}", sum(map(perms.is_up_down, _perms(n))), seq.euler_number(n))
        yield _eq(f"euler.andre.n{n}", sum(map(perms.is_andre, _perms(n))), seq.euler_number(n))
        yield _all(f"drop_hat.web.n{n}", grid.web_set(n, caps), lambda p: perms.drop_hat(p) == perms.drop(p))


def suite_lambda(max_n: int, max_chords: int) -> Iterator[Check]:
    caps = _caps(max_n)
    yield _eq("lambda.known_example", actions.lam((5, 1, 3, 6, 7, 2, 4, 8)), (5, 8, 2, 6, 4, 7, 1, 3))
    for n in range(1, max_n + 1):
        web = grid.web_set(n, caps)
        image = {actions.lam_web(p): p for p in web}
        delta = set(gamma.delta_set(n))
        yield _eq(f"lambda.bijection.n{n}", (len(image), set(image)), (len(web), delta))
        yield _all(
            f"lambda.stats.n{n}",
            image.items(),
            lambda qp: perms.fix(qp[0]) == perms.fix(qp[1])
            and len(perms.cycles(qp[0])) == len(perms.cycles(qp[1]))
            and perms.drop(qp[1]) == perms.drop_hat(qp[0])
            and [c[0] for c in perms.cycles(qp[0])] == [c[0] for c in perms.cycles(qp[1])],
        )
        andre = [w for w in _perms(n) if perms.is_andre(w)]
        yield _all(
            f"lambda.andre.n{n}",
            andre,
            lambda w: perms.is_up_down(actions.lam(w))
            and actions.lam(w)[0] == w[0]
            and actions.lam_inv(actions.lam(w)) == w
            and perms.des(w) == perms.mix(actions.lam(w)),
        )


def suite_actions(max_n: int, max_chords: int) -> Iterator[Check]:
    for letters, want in BFS_EXAMPLE_VALUES.items():
        yield _eq(f"bfs.example.{'-'.join(map(str, letters))}", actions.bfs_psi_set(BFS_EXAMPLE, letters), want)
    yield _eq("fs.example.5", actions.fs_phi(BFS_EXAMPLE, 5), (3, 4, 7, 10, 5, 8, 1, 6, 2, 9))
    yield _eq("fs.example.4", actions.fs_phi(BFS_EXAMPLE, 4), (3, 8, 5, 7, 10, 4, 1, 6, 2, 9))
    yield _eq("hr.known_example", actions.hr_phi_word((5, 6, 2, 3, 1, 4), 2), (5, 1, 3, 4, 2, 6))
    for n in range(1, min(max_n, 6) + 1):
        words = list(_perms(n))
        tilde = [p for p in words if not perms.has_double_descent(p)]
        yield _all(f"fs.involution.n{n}", words, lambda w: all(actions.fs_phi(actions.fs_phi(w, x), x) == w for x in w))
        yield _all(f"fs.commute.n{n}", words, lambda w: all(
            actions.fs_phi(actions.fs_phi(w, x), y) == actions.fs_phi(actions.fs_phi(w, y), x)
            for x, y in itertools.combinations(w, 2)))
        yield _all(f"bfs.involution.n{n}", tilde, lambda w: all(actions.bfs_psi(actions.bfs_psi(w, x), x) == w for x in w))
        yield _all(f"bfs.commute.n{n}", tilde, lambda w: all(
            actions.bfs_psi(actions.bfs_psi(w, x), y) == actions.bfs_psi(actions.bfs_psi(w, y), x)
            for x, y in itertools.combinations(w, 2)))
        trees = [actions.min_max_tree(w) for w in words]
        yield _all(f"hr.involution.n{n}", trees, lambda t: all(
            actions.hr_phi(actions.hr_phi(t, i), i) == t for i in range(1, n + 1)))
        yield _all(f"hr.commute.n{n}", trees, lambda t: all(
            actions.hr_phi(actions.hr_phi(t, i), j) == actions.hr_phi(actions.hr_phi(t, j), i)
            for i, j in itertools.combinations(range(1, n + 1), 2)))
    for n in range(1, min(max_n, 7) + 1):
        tilde = [p for p in _perms(n) if not perms.has_double_descent(p)]

        def invariant(p):
            s = perms.statistics(p)
            for x in p:
                r = perms.statistics(actions.bfs_psi(p, x))
                if (s.lrmi, s.rmida, s.des) != (r.lrmi, r.rmida, r.des):
                    return False
            return True

        yield _all(f"bfs.invariant_stats.n{n}", tilde, invariant)
        reps, seen, sizes_ok = set(), set(), True
        for p in tilde:
            if p in seen:
                continue
            orbit = actions.bfs_orbit(p)
            seen |= orbit
            sizes_ok &= len(orbit) == 2 ** len(actions.block_valleys(p))
            reps.add(actions.orbit_representative(p))
        yield _eq(f"orbit.size.n{n}", sizes_ok, True)
        if n > 1:
            yield _eq(f"cmap.bijection.n{n}", {actions.c_map(r) for r in reps}, set(grid.web_set(n - 1, _caps(max_n))))
            yield _all(f"cmap.stats.n{n}", reps, lambda r: (
                perms.statistics(r).rmida, perms.statistics(r).rmi - 1, perms.des(r)
            ) == (
                perms.fix(actions.c_map(r)), len(perms.cycles(actions.c_map(r))), perms.drop(actions.c_map(r))
            ))
    for n in range(1, min(max_n, 7) + 1):
        words = list(_perms(n))
        yield _all(f"andre.three_characterizations.n{n}", words, lambda w: perms.is_andre(w) == perms.is_andre_xfact(w)
                   == actions.is_increasing(actions.min_max_tree(w)))
    for n in range(1, max_n + 1):
        yield _all(f"mix.tree.n{n}", _perms(n), lambda w: perms.mix(w)
                   == actions.nodes_with_children(actions.min_max_tree(w), 2))


def suite_chord(max_n: int, max_chords: int) -> Iterator[Check]:
    caps = Caps(max_chords=max_chords)
    for m in range(1, min(max_chords, 5) + 1):
        yield _all(f"ncd.order_independent.m{m}", chord.all_diagrams(m), lambda d: chord.ncd(d, chord.first_crossing, caps)
                   == chord.ncd(d, chord.last_crossing, caps))
    for n in range(0, max_chords):
        for k in range(n + 1):
            if k >= 1:
                yield _eq(f"b_minus.shift.b({n},{k})", chord.b_minus(n, k, caps), chord.b_plus(n, k - 1, caps))
            if n % 2:
                m = (n + 1) // 2
                yield _eq(f"b_plus.seidel.odd.b({n},{k})", chord.b_plus(n, k, caps), seq.seidel(2 * m, m - k // 2))
            elif n >= 2:
                yield _eq(f"b_plus.seidel.even.b({n},{k})", chord.b_plus(n, k, caps), seq.seidel(n + 1, k // 2 + 1))
    # f needs size <= max_n, b_plus(a, .) needs a + 1 chords
    gcaps = _caps(max_n)
    for size in range(2, max_n + 1):
        if size % 2 == 0:
            n = size // 2
            if 2 * n - 1 > max_chords:
                continue
            for k in range(1, n + 1):
                yield _eq(f"first_letter.chords.even.f({size},{2 * k - 1})", grid.f(size, 2 * k - 1, gcaps),
                          chord.b_plus(2 * n - 2, 2 * n - 2 * k, caps))
        else:
            n = (size + 1) // 2
            if 2 * n - 2 > max_chords:
                continue
            for k in range(1, n):
                yield _eq(f"first_letter.chords.odd.f({size},{2 * k - 1})", grid.f(size, 2 * k - 1, gcaps),
                          chord.b_plus(2 * n - 3, 2 * n - 2 * k - 1, caps))
    for n in range(2, min(max_n, 7, max_chords) + 1):
        for k in range(1, n):
            yield _eq(f"h.p_transform.h(p{k}(id{n}))", grid.h(grid.p_transform(perms.identity(n), k), gcaps),
                      chord.b_plus(n - 1, n - k - 1, caps))


def suite_series(max_n: int, max_chords: int) -> Iterator[Check]:
    caps = _caps(max_n)
    for n in range(0, min(max_n, 12) + 1):
        egf = gamma.egf_coefficient(n)
        yield _eq(f"series.web.n{n}", egf, gamma.fix_cyc_web(n, caps))
        yield _eq(f"series.delta.n{n}", egf, gamma.fix_cyc_delta(n, caps))


def suite_pk_mix(max_n: int, max_chords: int) -> Iterator[Check]:
    caps = _caps(max_n)
    for n in range(1, max_n + 1):
        yield _eq(f"pk_mix.n{n}", gamma.pk_mix_check(n, caps), True)


SUITES: dict[str, SuiteFn] = {
    "conjecture-hjo": suite_first_letters,
    "gamma-xz": suite_gamma_xz,
    "equidist": suite_equidist,
    "lambda": suite_lambda,
    "actions": suite_actions,
    "chord": suite_chord,
    "series": suite_series,
    "pk-mix": suite_pk_mix,
}


@dataclasses.dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: list[dict]
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), indent=2)


def _collect(name: str, max_n: int, max_chords: int) -> list[dict]:
    out = []
    for cid, ok, witness in SUITES[name](max_n, max_chords):
        out.append({"id": f"{name}/{cid}", "status": "pass" if ok else "fail", "witness": witness})
    return out


def run_suite(name: str, max_n: int = 8, max_chords: int = 6, threads: int = 1) -> SuiteReport:
    if name != "all" and name not in SUITES:
        raise KeyError(name)
    names = list(SUITES) if name == "all" else [name]
    start = time.perf_counter()
    if threads > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_collect, names, [max_n] * len(names), [max_chords] * len(names)))
    else:
        parts = [_collect(s, max_n, max_chords) for s in names]
    checks = sorted((c for part in parts for c in part), key=lambda c: c["id"])
    elapsed = int((time.perf_counter() - start) * 1000)
    return SuiteReport(name, {"max_n": max_n, "max_chords": max_chords}, checks, elapsed)
