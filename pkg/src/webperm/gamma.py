"""
Eulerian and (alpha,t)-Eulerian polynomials, their gamma-expansions, the
normalized gamma-coefficients and the exponential generating function
exp(alpha (t-1) z) / (1 - sin z)^alpha used as an independent oracle.
"""
from __future__ import annotations

import functools
import math
from collections import Counter
from fractions import Fraction

from .config import DEFAULT_CAPS, Caps
from .errors import InvariantError, PreconditionError
from .grid import web_set
from .perms import (
    cycles,
    des,
    drop,
    drop_hat,
    enumerate_perms,
    fix,
    is_andre,
    is_cycle_up_down,
    mix,
    pk,
    statistics,
)
from .poly import ALPHA, ONE, T, X, MultiPoly, RationalSeries, poly_sum, sin_series


def _distribution(counts: Counter, var: str = "x") -> MultiPoly:
    return MultiPoly({_exps(var, k): c for k, c in counts.items()})


def _exps(var: str, k: int) -> tuple[int, int, int]:
    return {"t": (k, 0, 0), "alpha": (0, k, 0), "x": (0, 0, k)}[var]


@functools.lru_cache(maxsize=None)
def _eulerian(n: int) -> MultiPoly:
    by_des = Counter(des(p) for p in enumerate_perms(n, Caps(unbounded=True)))
    by_drop = Counter(drop(p) for p in enumerate_perms(n, Caps(unbounded=True)))
    if by_des != by_drop:
        raise InvariantError(f"des and drop disagree on S_{n}")
    return _distribution(by_des)


def eulerian(n: int, caps: Caps = DEFAULT_CAPS) -> MultiPoly:
    """A_n(x), counted once by descents and once by drops."""
    caps.check_n(n)
    return _eulerian(n)


@functools.lru_cache(maxsize=None)
def _at_eulerian(n: int) -> MultiPoly:
    counts: Counter = Counter()
    for p in enumerate_perms(n, Caps(unbounded=True)):
        s = statistics(p)
        counts[(s.lmidd + s.rmida, s.lrmi, s.des)] += 1
    return MultiPoly(counts)


def at_eulerian(n: int, caps: Caps = DEFAULT_CAPS) -> MultiPoly:
    """A_n(x, t | alpha) = sum of x^des t^(lmidd+rmida) alpha^(lmi+rmi-2)."""
    if n < 1:
        raise PreconditionError("n >= 1")
    caps.check_n(n)
    return _at_eulerian(n)


def gamma_basis(n: int, i: int) -> MultiPoly:
    return X ** i * (ONE + X) ** (n - 1 - 2 * i)


def gamma_expand(p: MultiPoly, n: int) -> list[MultiPoly]:
    """
    Coefficients g_i with p = sum_i g_i x^i (1+x)^(n-1-2i), peeled off in
    ascending i; raises if p is not in the span of that basis.
    """
    if p.degree("x") > n - 1:
        raise PreconditionError(f"degree in x exceeds {n - 1}")
    residual = p
    out = []
    for i in range((n - 1) // 2 + 1):
        g = residual.coefficient("x", i)
        out.append(g)
        residual = residual - g * gamma_basis(n, i)
    if residual:
        raise ValueError("polynomial is not in the span of the gamma basis")
    return out


def gamma_reconstruct(coeffs: list[MultiPoly], n: int) -> MultiPoly:
    return poly_sum(g * gamma_basis(n, i) for i, g in enumerate(coeffs))


def _fix_cyc(p) -> MultiPoly:
    return MultiPoly.monomial(1, t=fix(p), alpha=len(cycles(p)))


def d_web(n: int, i: int, caps: Caps = DEFAULT_CAPS) -> MultiPoly:
    """Sum of t^fix alpha^cyc over web permutations of [n-1] with i drops."""
    if n < 1:
        raise PreconditionError("n >= 1")
    caps.check_n(n - 1)
    return poly_sum(_fix_cyc(p) for p in web_set(n - 1, caps) if drop(p) == i)


@functools.lru_cache(maxsize=None)
def delta_set(n: int) -> tuple:
    return tuple(p for p in enumerate_perms(n, Caps(unbounded=True)) if is_cycle_up_down(p))


def d_delta(n: int, i: int, caps: Caps = DEFAULT_CAPS) -> MultiPoly:
    """Sum of t^fix alpha^cyc over cycle-up-down permutations of [n-1] with drop_hat = i."""
    if n < 1:
        raise PreconditionError("n >= 1")
    caps.check_n(n - 1)
    return poly_sum(_fix_cyc(p) for p in delta_set(n - 1) if drop_hat(p) == i)


def d_andre(n: int, i: int, caps: Caps = DEFAULT_CAPS) -> int:
    """Number of Andre permutations of [n] with i descents."""
    return sum(1 for p in enumerate_perms(n, caps) if des(p) == i and is_andre(p))


def fix_cyc_web(n: int, caps: Caps = DEFAULT_CAPS) -> MultiPoly:
    return poly_sum(_fix_cyc(p) for p in web_set(n, caps))


def fix_cyc_delta(n: int, caps: Caps = DEFAULT_CAPS) -> MultiPoly:
    caps.check_n(n)
    return poly_sum(_fix_cyc(p) for p in delta_set(n))


@functools.lru_cache(maxsize=None)
def series_oracle(order: int) -> RationalSeries:
    """exp(alpha (t-1) z) / (1 - sin z)^alpha through z^order."""
    if not 0 <= order <= 12:
        raise PreconditionError("order must be in 0..12")
    z = RationalSeries([0, ONE], order)
    neg_log = sin_series(order).log1m() * -1
    exponent = (z * (T - 1) + neg_log) * ALPHA
    return exponent.exp()


def egf_coefficient(n: int, order: int | None = None) -> MultiPoly:
    """n! [z^n] of the oracle series, required to have integer coefficients."""
    s = series_oracle(max(n, order or 0))
    c = s[n].scale(math.factorial(n))
    if not c.is_integral():
        raise InvariantError(f"n! [z^{n}] is not an integer polynomial: {c}")
    return c


def pk_distribution(n: int, caps: Caps = DEFAULT_CAPS) -> MultiPoly:
    return _distribution(Counter(pk(p) for p in enumerate_perms(n, caps)), "t")


def mix_distribution(n: int, caps: Caps = DEFAULT_CAPS) -> MultiPoly:
    return _distribution(Counter(mix(p) for p in enumerate_perms(n, caps)), "t")


def pk_mix_check(n: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """
    pk and mix have the same distribution on S_n, and both match the
    gamma-coefficients of A_n(x) scaled by 2^(n-1-2i).
    """
    if n < 1:
        raise PreconditionError("n >= 1")
    pks, mixes = pk_distribution(n, caps), mix_distribution(n, caps)
    if pks != mixes:
        return False
    gammas = gamma_expand(eulerian(n, caps), n)
    for i, g in enumerate(gammas):
        if g.value() * Fraction(2) ** (n - 1 - 2 * i) != pks.coefficient("t", i).value():
            return False
    return True
