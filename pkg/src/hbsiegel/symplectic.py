"""Symplectic similitudes over Q and 2x2 matrices over a totally real field.

Conventions: the standard form is ``psi = [[0, I], [-I, 0]]`` and ``m`` is a
similitude with factor ``nu`` when ``m^T psi m = nu psi``. A 2x2 matrix
``h = [[a, b], [c, d]]`` over F acts on the lattice ``D^-1 + O`` by
multiplication on column vectors ``(x, y)^T``, which is what keeps the lattice
stable for ``b in D^-1``, ``c in D``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LevelTooSmall, NonSquare, OddDimension
from .linalg import RatMatrix
from .numfield import FieldElement, NumberField


def standard_form(g: int) -> RatMatrix:
    if g < 1:
        raise ValueError("genus must be >= 1")
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[i][g + i] = 1
        rows[g + i][i] = -1
    return RatMatrix(rows)


def _genus_of(m: RatMatrix) -> int:
    if not m.is_square():
        raise NonSquare(f"matrix of shape {m.shape} is not square")
    if m.nrows % 2:
        raise OddDimension(f"dimension {m.nrows} is odd")
    return m.nrows // 2


def gsp_check(m: RatMatrix) -> Fraction | None:
    """Similitude factor of ``m`` if it is a symplectic similitude, else None."""
    g = _genus_of(m)
    psi = standard_form(g)
    lhs = m.T @ psi @ m
    nu = lhs[0, g]
    if nu == 0:
        return None
    return nu if lhs == psi.scale(nu) else None


def _check_level(n: int) -> None:
    if n < 3:
        raise LevelTooSmall(f"level n={n} < 3")


def gamma_n_check(m: RatMatrix, n: int) -> bool:
    """Membership in the principal congruence subgroup of level n of Sp(2g, Z)."""
    _check_level(n)
    g = _genus_of(m)
    if not m.is_integral():
        return False
    if gsp_check(m) != 1:
        return False
    ident = RatMatrix.identity(2 * g)
    return all((x - y).numerator % n == 0 for x, y in zip(m.entries(), ident.entries()))


@dataclass(frozen=True)
class GSpElement:
    m: RatMatrix
    nu: Fraction

    def __post_init__(self):
        if gsp_check(self.m) != self.nu:
            raise ValueError("matrix is not a similitude with the stated factor")

    @property
    def genus(self) -> int:
        return self.m.nrows // 2

    def __matmul__(self, other: GSpElement) -> GSpElement:
        return GSpElement(self.m @ other.m, self.nu * other.nu)


@dataclass(frozen=True, eq=False)
class HBMatrix:
    """``[[a, b], [c, d]]`` with entries in a common number field."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def __post_init__(self):
        f = self.a.field
        if any(x.field is not f for x in (self.b, self.c, self.d)):
            raise ValueError("entries must share one field")

    @property
    def field(self) -> NumberField:
        return self.a.field

    @classmethod
    def identity(cls, nf: NumberField) -> HBMatrix:
        return cls(nf.one, nf.zero, nf.zero, nf.one)

    @classmethod
    def from_rationals(cls, nf: NumberField, a, b, c, d) -> HBMatrix:
        return cls(*(nf.rational(x) for x in (a, b, c, d)))

    def entries(self) -> tuple[FieldElement, ...]:
        return self.a, self.b, self.c, self.d

    def __eq__(self, other) -> bool:
        return isinstance(other, HBMatrix) and self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __matmul__(self, o: HBMatrix) -> HBMatrix:
        return HBMatrix(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                        self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> HBMatrix:
        dinv = self.det().inverse()
        return HBMatrix(self.d * dinv, -self.b * dinv, -self.c * dinv, self.a * dinv)

    def apply(self, x: FieldElement, y: FieldElement) -> tuple[FieldElement, FieldElement]:
        """Column action ``(x, y) -> (a x + b y, c x + d y)``."""
        return self.a * x + self.b * y, self.c * x + self.d * y


def g_prime_check(h: HBMatrix) -> Fraction | None:
    """The rational q with ``det h = q``, when ``h`` lies in G'(Q)."""
    q = h.det().as_rational()
    if q is None or q == 0:
        return None
    return q


def sl_dm_o_check(h: HBMatrix) -> bool:
    """Membership in SL(D^-1 + O): a, d in O; b in D^-1; c in D; det 1."""
    nf = h.field
    return (h.det() == nf.one and nf.in_order(h.a) and nf.in_order(h.d)
            and nf.in_inverse_different(h.b) and nf.in_different(h.c))


def gamma_prime_n_check(h: HBMatrix, n: int) -> bool:
    _check_level(n)
    nf = h.field
    return (h.det() == nf.one
            and nf.in_order((h.a - 1) / n) and nf.in_order((h.d - 1) / n)
            and nf.in_inverse_different(h.b / n) and nf.in_different(h.c / n))


def trace_form_gram(nf: NumberField) -> RatMatrix:
    """Gram matrix of ``((x1,y1),(x2,y2)) -> Tr(x1 y2 - y1 x2)`` on ``(e*_1..e*_g, e_1..e_g)``."""
    vecs = [(e, nf.zero) for e in nf.dual_basis] + [(nf.zero, e) for e in nf.basis]

    def form(u, v):
        return (u[0] * v[1] - u[1] * v[0]).trace()

    return RatMatrix([[form(u, v) for v in vecs] for u in vecs])

