"""Univariate rational polynomials, Sturm sequences and rational intervals.

Polynomials are coefficient lists in ascending degree order. Real roots are
isolated with Sturm counts and refined by bisection; all endpoints stay exact
rationals, so every enclosure produced here is certified.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import to_fraction

Poly = list  # list[Fraction], ascending, no trailing zeros (zero poly is [])


def trim(p: Sequence) -> Poly:
    out = [to_fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def derivative(p: Poly) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b):
        c = r[-1] / lead
        shift = len(r) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] -= c * bc
        r = trim(r)
    return trim(q), r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return a
    return [c / a[-1] for c in a]


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def is_squarefree(p: Poly) -> bool:
    return degree(poly_gcd(p, derivative(p))) == 0


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [trim(p), derivative(p)]
    while chain[-1]:
        rem = poly_divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sign_variations(chain: list[Poly], x: Fraction) -> int:
    signs = [s for s in (_sign(evaluate(q, x)) for q in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_roots(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    return sign_variations(chain, a) - sign_variations(chain, b)


def cauchy_bound(p: Poly) -> Fraction:
    p = trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class Interval:
    """Closed rational interval ``[lo, hi]``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", to_fraction(self.lo))
        object.__setattr__(self, "hi", to_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> Interval:
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = to_fraction(x)
        return self.lo <= x <= self.hi

    def disjoint(self, other: Interval) -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def _coerce(self, other) -> Interval:
        return other if isinstance(other, Interval) else Interval.point(other)

    def __add__(self, other) -> Interval:
        o = self._coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other) -> Interval:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Interval:
        return self._coerce(other) - self

    def __mul__(self, other) -> Interval:
        o = self._coerce(other)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def is_positive(self) -> bool:
        return self.lo > 0

    def __float__(self) -> float:
        return float(self.mid)


def eval_interval(p: Poly, x: Interval) -> Interval:
    acc = Interval.point(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def isolate_real_roots(p: Poly) -> list[Interval]:
    """Disjoint isolating intervals, ascending, one per distinct real root.

    Exact rational roots are returned as point intervals. Every other interval
    ``[lo, hi]`` has ``p(lo) * p(hi) < 0``.
    """
    p = trim(p)
    if degree(p) < 1:
        return []
    chain = sturm_chain(p)
    bound = cauchy_bound(p)
    out: list[Interval] = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = count_roots(chain, a, b)
        if n == 0:
            continue
        if n == 1:
            if evaluate(p, b) == 0:
                out.append(Interval.point(b))
                continue
            # a may be the (excluded) root of the neighbouring cell
            if evaluate(p, a) != 0:
                out.append(Interval(a, b))
                continue
        m = (a + b) / 2
        stack.append((m, b))
        stack.append((a, m))
    out.sort(key=lambda iv: iv.lo)
    return out


def refine_root(p: Poly, iv: Interval, width: Fraction) -> Interval:
    """Bisect an isolating interval down to ``width`` (sign-change based)."""
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        return iv
    slo = _sign(evaluate(p, lo))
    if slo == 0:
        return Interval.point(lo)
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = _sign(evaluate(p, m))
        if sm == 0:
            return Interval.point(m)
        if sm == slo:
            lo = m
        else:
            hi = m
    return Interval(lo, hi)
