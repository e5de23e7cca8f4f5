"""Torsion points of the two abelian families and their transport.

Fibre points are kept in lattice coordinates. On the Siegel side a point of
``C^g / (Z^g + tau Z^g)`` is a vector ``v = (v1, v2)`` in ``Q^2g / Z^2g``
standing for ``v1 + tau v2``. On the Hilbert side a point is a pair ``(x, y)``
in ``F^2`` modulo ``D^-1 + O`` standing for ``x + tau y``.

Group actions are left actions on column vectors throughout: ``h`` sends
``(x, y)`` to ``(a x + b y, c x + d y)`` and a 2g x 2g matrix ``m`` sends ``v``
to ``m v``. With this pairing ``transport`` intertwines ``h`` and
``iota_bar(h)``; see ``lattice_equivariance``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterator, Sequence, Union

from .errors import InputError, NotInLatticeGroup
from .linalg import RatMatrix, frac_mod1, solve, to_fraction, vec_gcd_order, vec_is_integral
from .modembed import HBPoint, SiegelPoint, iota_bar, iota_point
from .numfield import FieldElement, NumberField
from .symplectic import HBMatrix, gamma_n_check, gamma_prime_n_check, sl_dm_o_check

CVector = tuple  # (re: tuple[Fraction], im: tuple[Fraction])


def _reduce(v: Sequence) -> tuple[Fraction, ...]:
    return tuple(frac_mod1(to_fraction(x)) for x in v)


@dataclass(frozen=True)
class TorsionPoint:
    """Point of ``(1/n) Z^2g / Z^2g``, stored reduced into ``[0, 1)``."""

    v: tuple
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError("torsion bound n must be >= 1")
        v = _reduce(self.v)
        if len(v) % 2:
            raise InputError("torsion vectors have even length 2g")
        if not vec_is_integral(x * self.n for x in v):
            raise InputError(f"{self.n} * v is not integral")
        object.__setattr__(self, "v", v)

    @property
    def genus(self) -> int:
        return len(self.v) // 2

    @property
    def order(self) -> int:
        return vec_gcd_order(self.v)

    def __add__(self, other: TorsionPoint) -> TorsionPoint:
        return TorsionPoint(tuple(a + b for a, b in zip(self.v, other.v)), lcm(self.n, other.n))


class HBTorsionPoint:
    """``(x, y)`` with ``n x in D^-1`` and ``n y in O``, reduced mod ``D^-1 + O``."""

    __slots__ = ("x", "y", "n", "raw")

    def __init__(self, x: FieldElement, y: FieldElement, n: int, reduce: bool = True):
        nf = x.field
        if y.field is not nf:
            raise ValueError("x and y must lie in the same field")
        if n < 1:
            raise InputError("torsion bound n must be >= 1")
        if not nf.in_inverse_different(x * n):
            raise InputError(f"{n} * x is not in the inverse different")
        if not nf.in_order(y * n):
            raise InputError(f"{n} * y is not in the order")
        self.raw = (x, y)
        if reduce:
            x = nf.from_dual_coords(_reduce(nf.coords_in_dual(x)))
            y = nf.from_basis_coords(_reduce(nf.coords_in_basis(y)))
        self.x, self.y, self.n = x, y, n

    @property
    def field(self) -> NumberField:
        return self.x.field

    def __eq__(self, other) -> bool:
        return (isinstance(other, HBTorsionPoint) and self.x == other.x and self.y == other.y)

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        return f"HBTorsionPoint(x={self.x!r}, y={self.y!r}, n={self.n})"

    def __add__(self, other: HBTorsionPoint) -> HBTorsionPoint:
        return HBTorsionPoint(self.x + other.x, self.y + other.y, lcm(self.n, other.n))

    @classmethod
    def from_lattice_coords(cls, nf: NumberField, v: Sequence, n: int) -> HBTorsionPoint:
        g = nf.degree
        return cls(nf.from_dual_coords(v[:g]), nf.from_basis_coords(v[g:]), n)


def enumerate_torsion(n: int, g: int) -> Iterator[TorsionPoint]:
    """All ``n^(2g)`` points of ``(1/n) Z^2g / Z^2g``, lexicographically, lazily."""
    if n < 1:
        raise InputError("n must be >= 1")
    for ks in product(range(n), repeat=2 * g):
        yield TorsionPoint(tuple(Fraction(k, n) for k in ks), n)


def enumerate_hb_torsion(nf: NumberField, n: int) -> Iterator[HBTorsionPoint]:
    for t in enumerate_torsion(n, nf.degree):
        yield HBTorsionPoint.from_lattice_coords(nf, t.v, n)


def transport(t: HBTorsionPoint) -> TorsionPoint:
    """``(Tr(x e_1), ..., Tr(x e_g), Tr(y e*_1), ..., Tr(y e*_g))`` mod ``Z^2g``."""
    nf = t.field
    return TorsionPoint(nf.coords_in_dual(t.x) + nf.coords_in_basis(t.y), t.n)


def hb_order(t: HBTorsionPoint) -> int:
    """Least k with ``k x in D^-1`` and ``k y in O``, found by search."""
    nf = t.field
    for k in range(1, t.n + 1):
        if nf.in_inverse_different(t.x * k) and nf.in_order(t.y * k):
            return k
    raise AssertionError("unreachable: n kills t")  # pragma: no cover


# --- fibre values ----------------------------------------------------------------

def section_value(v: TorsionPoint, tau: SiegelPoint) -> CVector:
    """``v1 + tau v2`` as (real part, imaginary part)."""
    g = tau.genus
    if v.genus != g:
        raise ValueError("genus mismatch")
    if tau.orientation != 1:
        raise InputError("section values are taken on the upper half-space")
    v1, v2 = v.v[:g], v.v[g:]
    re = tuple(a + b for a, b in zip(v1, tau.re.apply(v2)))
    return re, tau.im.apply(v2)


def hb_section_value(t: HBTorsionPoint, tau: HBPoint) -> CVector:
    """``x + tau y`` pushed to ``C^g`` by ``z -> (Tr(e_j z))_j``.

    In real coordinates this is left multiplication by ``R^T = R'^-1``, which
    carries ``D^-1 + tau O`` onto ``Z^g + iota(tau) Z^g``.
    """
    nf = t.field
    x, y = t.raw
    zr, zi = x + tau.re * y, tau.im * y
    return (tuple((zr * e).trace() for e in nf.basis),
            tuple((zi * e).trace() for e in nf.basis))


def fibre_lattice_coords(w: CVector, tau: SiegelPoint) -> tuple[tuple, tuple]:
    """Real ``(u, v)`` with ``w = u + tau v``."""
    re, im = w
    v = solve(tau.im, im)
    u = tuple(a - b for a, b in zip(re, tau.re.apply(v)))
    return u, v


def in_fibre_lattice(w: CVector, tau: SiegelPoint) -> bool:
    u, v = fibre_lattice_coords(w, tau)
    return vec_is_integral(u) and vec_is_integral(v)


def check_cartesian_transport(t: HBTorsionPoint, tau: HBPoint) -> bool:
    """The Hilbert section value and the transported Siegel one agree modulo the fibre lattice."""
    stau = iota_point(tau)
    lhs = hb_section_value(t, tau)
    rhs = section_value(transport(t), stau)
    diff = (tuple(a - b for a, b in zip(lhs[0], rhs[0])),
            tuple(a - b for a, b in zip(lhs[1], rhs[1])))
    return in_fibre_lattice(diff, stau)


# --- actions ------------------------------------------------------------------------

def act_hb(h: HBMatrix, t: HBTorsionPoint) -> HBTorsionPoint:
    if not sl_dm_o_check(h):
        raise NotInLatticeGroup("h does not preserve D^-1 + O")
    x, y = h.apply(t.x, t.y)
    return HBTorsionPoint(x, y, t.n)


def act_siegel(m: RatMatrix, v: TorsionPoint) -> TorsionPoint:
    return TorsionPoint(m.apply(v.v), v.n)


def lattice_equivariance(t: HBTorsionPoint, h: HBMatrix) -> bool:
    """``transport(h . t) == iota_bar(h) . transport(t)`` on n-torsion."""
    lhs = transport(act_hb(h, t))
    rhs = act_siegel(iota_bar(h).m, transport(t))
    return lhs == rhs


# --- semidirect products --------------------------------------------------------------

GroupPart = Union[RatMatrix, HBMatrix]


@dataclass(frozen=True, eq=False)
class SemidirectElement:
    """``(lattice, gamma)`` in ``Z^2g x| Gamma(n)`` or ``(D^-1 + O) x| Gamma'(n)``.

    The lattice part is an integer vector; on the Hilbert side it holds
    coordinates in the basis ``(e*, e)``. The law is
    ``(v1, g1)(v2, g2) = (v1 + g1 v2, g1 g2)``.
    """

    lattice: tuple
    group: GroupPart
    level: int

    def __post_init__(self):
        lat = tuple(to_fraction(x) for x in self.lattice)
        if not vec_is_integral(lat):
            raise InputError("lattice part must be integral")
        object.__setattr__(self, "lattice", lat)
        if isinstance(self.group, HBMatrix):
            ok = gamma_prime_n_check(self.group, self.level)
        else:
            ok = gamma_n_check(self.group, self.level)
        if not ok:
            raise NotInLatticeGroup("group part fails the level-n membership test")

    def act(self, v: Sequence) -> tuple[Fraction, ...]:
        """Linear part applied to a coordinate vector."""
        if isinstance(self.group, RatMatrix):
            return self.group.apply(v)
        nf = self.group.field
        g = nf.degree
        x, y = self.group.apply(nf.from_dual_coords(v[:g]), nf.from_basis_coords(v[g:]))
        return nf.coords_in_dual(x) + nf.coords_in_basis(y)

    def __mul__(self, other: SemidirectElement) -> SemidirectElement:
        lat = tuple(a + b for a, b in zip(self.lattice, self.act(other.lattice)))
        return SemidirectElement(lat, self.group @ other.group, self.level)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SemidirectElement) and self.lattice == other.lattice
                and self.group == other.group)

    def __hash__(self) -> int:
        return hash(self.lattice)

    def to_siegel(self) -> SemidirectElement:
        """Image under ``(v, h) -> (v, iota_bar(h))``."""
        if not isinstance(self.group, HBMatrix):
            return self
        return SemidirectElement(self.lattice, iota_bar(self.group).m, self.level)
