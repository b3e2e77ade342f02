"""
Sparse exact polynomials in t, alpha, x and truncated power series in z
whose coefficients are such polynomials.

Coefficients are ints or ``fractions.Fraction``; nothing is ever rounded.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

VARS = ("t", "alpha", "x")
Exps = tuple[int, int, int]
Number = Union[int, Fraction]


def _normalize(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MultiPoly:
    """Polynomial in (t, alpha, x) stored as {exponent triple: coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exps, Number] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                clean[tuple(e)] = _normalize(c)
        self.terms: dict[Exps, Number] = clean

    @classmethod
    def const(cls, c: Number) -> "MultiPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, c: Number = 1, t: int = 0, alpha: int = 0, x: int = 0) -> "MultiPoly":
        return cls({(t, alpha, x): c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        e = [0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1})

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, Number] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: Number) -> "MultiPoly":
        return MultiPoly({e: c * v for e, v in self.terms.items()})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection --------------------------------------------------------

    def degree(self, var: str) -> int:
        k = VARS.index(var)
        return max((e[k] for e in self.terms), default=-1)

    def coefficient(self, var: str, power: int) -> "MultiPoly":
        """Coefficient of var^power, as a polynomial in the other variables."""
        k = VARS.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[k] == power:
                e2 = list(e)
                e2[k] = 0
                out[tuple(e2)] = c
        return MultiPoly(out)

    def subs(self, **values: Number) -> "MultiPoly":
        """Specialize some variables to numbers."""
        out: dict[Exps, Number] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for name, v in values.items():
                k = VARS.index(name)
                c = c * v ** e2[k]
                e2[k] = 0
            out[tuple(e2)] = out.get(tuple(e2), 0) + c
        return MultiPoly(out)

    def value(self) -> Number:
        """The constant term of a polynomial with no variables left."""
        if any(e != (0, 0, 0) for e in self.terms):
            raise ValueError("polynomial is not constant")
        return self.terms.get((0, 0, 0), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def items(self) -> list[tuple[Exps, Number]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            factors = [str(c)]
            for name, k in zip(VARS, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


T = MultiPoly.var("t")
ALPHA = MultiPoly.var("alpha")
X = MultiPoly.var("x")
ONE = MultiPoly.const(1)
ZERO = MultiPoly()


def poly_sum(polys: Iterable[MultiPoly]) -> MultiPoly:
    """Sum many polynomials without rebuilding the dict at every step."""
    out: dict[Exps, Number] = {}
    for p in polys:
        for e, c in p.terms.items():
            out[e] = out.get(e, 0) + c
    return MultiPoly(out)


class RationalSeries:
    """Power series in z truncated after z^order; coefficients are MultiPolys."""

    def __init__(self, coeffs: Iterable[MultiPoly | Number], order: int):
        cs = [c if isinstance(c, MultiPoly) else MultiPoly.const(c) for c in coeffs]
        cs = cs[: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        self.coeffs = cs
        self.order = order

    def __getitem__(self, k: int) -> MultiPoly:
        return self.coeffs[k] if 0 <= k <= self.order else ZERO

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order)
        return RationalSeries([self[k] + other[k] for k in range(n + 1)], n)

    def __mul__(self, other):
        if isinstance(other, (MultiPoly, int, Fraction)):
            return RationalSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            out.append(poly_sum(self[i] * other[k - i] for i in range(k + 1)))
        return RationalSeries(out, n)

    __rmul__ = __mul__

    def exp(self) -> "RationalSeries":
        """exp of a series without constant term, summed as powers over k!."""
        if self[0]:
            raise ValueError("exp needs zero constant term")
        total = [ZERO] * (self.order + 1)
        power = RationalSeries([ONE], self.order)
        for k in range(self.order + 1):
            for i in range(self.order + 1):
                total[i] = total[i] + power[i].scale(Fraction(1, math.factorial(k)))
            power = power * self
        return RationalSeries(total, self.order)

    def log1m(self) -> "RationalSeries":
        """log(1 - S) for a series S without constant term."""
        if self[0]:
            raise ValueError("log1m needs zero constant term")
        total = RationalSeries([], self.order)
        power = self
        for k in range(1, self.order + 1):
            total = total + power * Fraction(-1, k)
            power = power * self
        return total


def sin_series(order: int) -> RationalSeries:
    cs: list[Number] = [0] * (order + 1)
    for k in range(1, order + 1, 2):
        cs[k] = Fraction((-1) ** ((k - 1) // 2), math.factorial(k))
    return RationalSeries(cs, order)
