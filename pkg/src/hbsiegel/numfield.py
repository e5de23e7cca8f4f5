"""Totally real number fields with a chosen order basis.

A field is ``Q[x]/(f)`` for a monic squarefree rational ``f`` whose roots are
all real. Elements are stored in the power basis ``1, t, ..., t^(g-1)``; the
order basis ``e`` and its trace dual ``e*`` are derived views.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import roots
from .errors import (DivisionByZero, InputError, NotAnOrder, NotTotallyReal,
                     RepeatedRoots, SingularBasis, SingularMatrix)
from .linalg import RatMatrix, dual_lattice_basis, solve, to_fraction, vec_is_integral
from .roots import Interval


class FieldElement:
    """Exact element of a :class:`NumberField`, power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Iterable):
        c = tuple(to_fraction(x) for x in coords)
        if len(c) != field.degree:
            raise ValueError(f"expected {field.degree} coordinates, got {len(c)}")
        self.field = field
        self.coords = c

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field.rational(other)

    def __add__(self, other) -> FieldElement:
        o = self._coerce(other)
        return FieldElement(self.field, (a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, (-a for a in self.coords))

    def __sub__(self, other) -> FieldElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> FieldElement:
        return self._coerce(other) - self

    def __mul__(self, other) -> FieldElement:
        if not isinstance(other, FieldElement):
            c = to_fraction(other)
            return FieldElement(self.field, (c * a for a in self.coords))
        o = self._coerce(other)
        return FieldElement(self.field, self.field._mul_coords(self.coords, o.coords))

    __rmul__ = __mul__

    def __truediv__(self, other) -> FieldElement:
        if not isinstance(other, FieldElement):
            c = to_fraction(other)
            if c == 0:
                raise DivisionByZero("division by zero")
            return FieldElement(self.field, (a / c for a in self.coords))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> FieldElement:
        return self._coerce(other) / self

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> FieldElement:
        try:
            sol = solve(self.mult_matrix(), self.field.one.coords)
        except SingularMatrix:
            raise DivisionByZero(f"{self} is not invertible") from None
        return FieldElement(self.field, sol)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return other.field is self.field and other.coords == self.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*t^{i}")
        return "FieldElement(" + (" + ".join(terms) or "0") + ")"

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def as_rational(self) -> Fraction | None:
        return self.coords[0] if self.is_rational() else None

    def mult_matrix(self) -> RatMatrix:
        """Matrix of ``y -> self*y`` on power-basis coordinates (columns = images)."""
        f = self.field
        cols = [f._mul_coords(self.coords, f.power(j).coords) for j in range(f.degree)]
        return RatMatrix(zip(*cols))

    def trace(self) -> Fraction:
        return sum((a * t for a, t in zip(self.coords, self.field.power_traces)), Fraction(0))

    def norm(self) -> Fraction:
        return self.mult_matrix().det()


class NumberField:
    """Totally real field ``Q[t]/(minpoly)`` with a Z-basis of an order."""

    def __init__(self, minpoly: Sequence, basis: Sequence[Sequence]):
        f = roots.trim(minpoly)
        if len(f) < 2:
            raise InputError("minimal polynomial must have degree >= 1")
        if f[-1] != 1:
            raise InputError("minimal polynomial must be monic")
        g = len(f) - 1
        self.minpoly = tuple(f)
        self.degree = g
        if len(basis) != g or any(len(v) != g for v in basis):
            raise InputError(f"basis must be {g} vectors of length {g}")
        if not roots.is_squarefree(f):
            raise RepeatedRoots("minimal polynomial has repeated roots")
        chain = roots.sturm_chain(f)
        bound = roots.cauchy_bound(f)
        nreal = roots.count_roots(chain, -bound, bound)
        if nreal < g:
            raise NotTotallyReal(f"only {nreal} of {g} roots are real")

        # t^k for k < 2g-1, reduced; needed by _mul_coords
        self._powers: list[tuple[Fraction, ...]] = []
        cur = [Fraction(0)] * g
        cur[0] = Fraction(1)
        for _ in range(2 * g - 1):
            self._powers.append(tuple(cur))
            cur = self._times_t(cur)

        self.basis = tuple(FieldElement(self, v) for v in basis)
        self.basis_matrix = RatMatrix(zip(*(e.coords for e in self.basis)))
        if self.basis_matrix.det() == 0:
            raise SingularBasis("basis vectors are linearly dependent")
        if not vec_is_integral(self.coords_in_order_basis_by_solve(self.one)):
            raise NotAnOrder("1 is not in the Z-span of the basis")
        for i, ei in enumerate(self.basis):
            for ej in self.basis[i:]:
                if not vec_is_integral(self.coords_in_order_basis_by_solve(ei * ej)):
                    raise NotAnOrder("basis is not closed under multiplication")

        self._emb_cache: dict[int, RealEmbeddingSet] = {}
        # traces of t^i via the multiplication operator
        self.power_traces = tuple(self.power(i).mult_matrix().trace() for i in range(g))
        self.gram = RatMatrix([[(a * b).trace() for b in self.basis] for a in self.basis])

    def _times_t(self, c: Sequence[Fraction]) -> list[Fraction]:
        g = self.degree
        top = c[-1]
        out = [Fraction(0)] + list(c[:-1])
        if top:
            for i in range(g):
                out[i] -= top * self.minpoly[i]
        return out

    def _mul_coords(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
        g = self.degree
        prod = [Fraction(0)] * (2 * g - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:g]
        for k in range(g, 2 * g - 1):
            c = prod[k]
            if c:
                for i, p in enumerate(self._powers[k]):
                    out[i] += c * p
        return tuple(out)

    def __repr__(self) -> str:
        return f"NumberField(minpoly={[str(c) for c in self.minpoly]}, degree={self.degree})"

    # element constructors

    def element(self, coords: Iterable) -> FieldElement:
        return FieldElement(self, coords)

    def rational(self, q) -> FieldElement:
        c = [Fraction(0)] * self.degree
        c[0] = to_fraction(q)
        return FieldElement(self, c)

    @cached_property
    def one(self) -> FieldElement:
        return self.rational(1)

    @cached_property
    def zero(self) -> FieldElement:
        return self.rational(0)

    def power(self, k: int) -> FieldElement:
        if k < len(self._powers):
            return FieldElement(self, self._powers[k])
        return self.power(1) ** k

    @property
    def generator(self) -> FieldElement:
        return self.power(1)

    # trace duality

    @property
    def discriminant(self) -> Fraction:
        return self.gram.det()

    @cached_property
    def dual_basis(self) -> tuple[FieldElement, ...]:
        """``e*`` with ``Tr(e*_j e_k) = delta_jk``; a Z-basis of the inverse different."""
        ginv = self.gram.inverse()
        return tuple(
            sum((e * ginv[j, k] for k, e in enumerate(self.basis)), self.zero)
            for j in range(self.degree)
        )

    def coords_in_dual(self, x: FieldElement) -> tuple[Fraction, ...]:
        """``(Tr(x e_1), ..., Tr(x e_g))``: coordinates of x in the e* basis."""
        return tuple((x * e).trace() for e in self.basis)

    def coords_in_basis(self, x: FieldElement) -> tuple[Fraction, ...]:
        """``(Tr(x e*_1), ..., Tr(x e*_g))``: coordinates of x in the e basis."""
        return tuple((x * e).trace() for e in self.dual_basis)

    def coords_in_order_basis_by_solve(self, x: FieldElement) -> tuple[Fraction, ...]:
        # linear-solve route, used before the gram matrix exists
        return solve(self.basis_matrix, x.coords)

    def from_basis_coords(self, w: Sequence) -> FieldElement:
        return sum((e * to_fraction(c) for e, c in zip(self.basis, w)), self.zero)

    def from_dual_coords(self, u: Sequence) -> FieldElement:
        return sum((e * to_fraction(c) for e, c in zip(self.dual_basis, u)), self.zero)

    # ideal membership, all decided by trace pairing

    def in_order(self, x: FieldElement) -> bool:
        return vec_is_integral(self.coords_in_basis(x))

    def in_inverse_different(self, x: FieldElement) -> bool:
        return vec_is_integral(self.coords_in_dual(x))

    def in_different(self, x: FieldElement) -> bool:
        return all(self.in_order(x * e) for e in self.dual_basis)

    @cached_property
    def different_basis(self) -> tuple[FieldElement, ...]:
        """A Z-basis of ``D = {x : x e*_j in O for all j}``."""
        rows = []
        for ej in self.dual_basis:
            for ei in self.dual_basis:
                rows.append([(ek * ej * ei).trace() for ek in self.basis])
        vecs = dual_lattice_basis(rows)
        return tuple(self.from_basis_coords(w) for w in vecs)

    # real embeddings

    def real_embeddings(self, p: int) -> RealEmbeddingSet:
        return real_embeddings(self, p)


@dataclass(frozen=True)
class RealEmbeddingSet:
    """Isolating intervals for the roots of the minimal polynomial, ascending."""

    field: NumberField
    intervals: tuple[Interval, ...]
    precision: int

    def embed(self, x: FieldElement) -> tuple[Interval, ...]:
        """Enclosures of ``sigma_i(x)`` for i = 1..g."""
        return tuple(roots.eval_interval(list(x.coords), iv) for iv in self.intervals)


def real_embeddings(nf: NumberField, p: int) -> RealEmbeddingSet:
    if p < 1:
        raise InputError("precision must be >= 1")
    if p in nf._emb_cache:
        return nf._emb_cache[p]
    f = list(nf.minpoly)
    width = Fraction(1, 2 ** p)
    ivs = [roots.refine_root(f, iv, width) for iv in roots.isolate_real_roots(f)]
    # neighbouring cells can share an endpoint; shrink until strictly separated
    while True:
        touching = [i for i in range(len(ivs) - 1) if not ivs[i].disjoint(ivs[i + 1])]
        if not touching:
            break
        for i in touching:
            for k in (i, i + 1):
                ivs[k] = roots.refine_root(f, ivs[k], ivs[k].width / 2)
    out = RealEmbeddingSet(nf, tuple(ivs), p)
    nf._emb_cache[p] = out
    return out


def nf_create(minpoly: Sequence, basis: Sequence[Sequence]) -> NumberField:
    return NumberField(minpoly, basis)


def power_basis(g: int) -> list[list[int]]:
    return [[1 if i == j else 0 for i in range(g)] for j in range(g)]


def trace(x: FieldElement) -> Fraction:
    return x.trace()


def norm(x: FieldElement) -> Fraction:
    return x.norm()


def dual_basis(nf: NumberField) -> tuple[FieldElement, ...]:
    return nf.dual_basis


def coords_in_dual(x: FieldElement) -> tuple[Fraction, ...]:
    return x.field.coords_in_dual(x)


def coords_in_basis(x: FieldElement) -> tuple[Fraction, ...]:
    return x.field.coords_in_basis(x)
