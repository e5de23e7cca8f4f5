"""The modular embedding from Hilbert-Blumenthal data to Siegel data.

``iota_bar`` is computed exactly from trace pairings against the bases
``e`` and ``e*`` of ``O`` and ``D^-1``. The literal conjugation by
``diag(R', R)`` with ``R = (sigma_i(e_j))`` and ``R' = (sigma_i(e*_j))`` is
only evaluated in interval arithmetic, as a certified cross-check.

Half-space points have coordinates in ``F (x) Q(i)`` on the Hilbert side and
in ``M_g(Q(i))`` on the Siegel side, so every identity is decided exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .errors import (InputError, NotInGPrime, NotUpperHalf, SingularDenominator,
                     SingularMatrix, DivisionByZero)
from .linalg import RatMatrix
from .numfield import FieldElement, NumberField, RealEmbeddingSet, real_embeddings
from .roots import Interval
from .symplectic import (GSpElement, HBMatrix, g_prime_check, gsp_check, sl_dm_o_check,
                         standard_form, trace_form_gram)

IntervalMatrix = list  # list[list[Interval]]


# --- interval matrices -------------------------------------------------------

def imat_mul(a: IntervalMatrix, b: IntervalMatrix) -> IntervalMatrix:
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Interval.point(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def imat_transpose(a: IntervalMatrix) -> IntervalMatrix:
    return [list(r) for r in zip(*a)]


def imat_det(a: IntervalMatrix) -> Interval:
    """Leibniz expansion; fine for the g <= 4 matrices used here."""
    n = len(a)
    total = Interval.point(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Interval.point(-1 if inv % 2 else 1)
        for i, j in enumerate(perm):
            term = term * a[i][j]
        total = total + term
    return total


def imat_contains(a: IntervalMatrix, m: RatMatrix) -> bool:
    return all(a[i][j].contains(m[i, j]) for i in range(m.nrows) for j in range(m.ncols))


def imat_max_width(a: IntervalMatrix, offdiag_only: bool = False) -> Fraction:
    return max((iv.width for i, r in enumerate(a) for j, iv in enumerate(r)
                if not (offdiag_only and i == j)), default=Fraction(0))


def _diag(xs: Sequence[Interval]) -> IntervalMatrix:
    z = Interval.point(0)
    return [[xs[i] if i == j else z for j in range(len(xs))] for i in range(len(xs))]


# --- embedding data ------------------------------------------------------------

@dataclass(frozen=True)
class EmbeddingData:
    nf: NumberField
    emb: RealEmbeddingSet
    R: tuple        # R[i][j] encloses sigma_i(e_j)
    Rstar: tuple    # Rstar[i][j] encloses sigma_i(e*_j)

    @property
    def precision(self) -> int:
        return self.emb.precision

    def identity_enclosure(self) -> IntervalMatrix:
        """Enclosure of ``R^T R'``, which is exactly the identity."""
        return imat_mul(imat_transpose(self.R), self.Rstar)

    def certified(self) -> bool:
        return imat_contains(self.identity_enclosure(), RatMatrix.identity(self.nf.degree))

    def gram_enclosure(self) -> IntervalMatrix:
        """``R^T R``, entrywise ``sum_i sigma_i(e_j) sigma_i(e_k)``; contains the gram matrix."""
        return imat_mul(imat_transpose(self.R), self.R)

    def iota_bar_enclosure(self, h: HBMatrix) -> IntervalMatrix:
        """``diag(R', R)^-1 [[a*, b*], [c*, d*]] diag(R', R)`` in interval arithmetic.

        ``diag(R', R)^-1`` is taken as ``diag(R^T, R'^T)``, the identity the
        enclosure above certifies.
        """
        a, b, c, d = (_diag(self.emb.embed(x)) for x in h.entries())
        rt, rst = imat_transpose(self.R), imat_transpose(self.Rstar)
        tl = imat_mul(imat_mul(rt, a), self.Rstar)
        tr = imat_mul(imat_mul(rt, b), self.R)
        bl = imat_mul(imat_mul(rst, c), self.Rstar)
        br = imat_mul(imat_mul(rst, d), self.R)
        return [x + y for x, y in zip(tl, tr)] + [x + y for x, y in zip(bl, br)]


def compute_embedding_data(nf: NumberField, p: int) -> EmbeddingData:
    if p < 1:
        raise InputError("precision must be >= 1")
    while True:
        emb = real_embeddings(nf, p)
        cols = [emb.embed(e) for e in nf.basis]
        cols_star = [emb.embed(e) for e in nf.dual_basis]
        g = nf.degree
        R = tuple(tuple(cols[j][i] for j in range(g)) for i in range(g))
        Rstar = tuple(tuple(cols_star[j][i] for j in range(g)) for i in range(g))
        data = EmbeddingData(nf, emb, R, Rstar)
        if data.certified():
            return data
        p *= 2  # pragma: no cover - the identity is exact, enclosures always contain it


# --- the group map ---------------------------------------------------------------

def iota_bar_matrix(h: HBMatrix) -> RatMatrix:
    """The 2g x 2g rational matrix of ``h`` acting on ``D^-1 + O`` in the basis ``(e*, e)``."""
    nf = h.field
    e, es = nf.basis, nf.dual_basis

    def block(x: FieldElement, src, dst):
        # column k = coordinates of x*src_k; coordinate j read off by pairing with dst_j
        return [[(x * s * t).trace() for s in src] for t in dst]

    tl = block(h.a, es, e)     # D^-1 -> D^-1, coords by Tr(. e_j)
    tr = block(h.b, e, e)      # O -> D^-1
    bl = block(h.c, es, es)    # D^-1 -> O, coords by Tr(. e*_j)
    br = block(h.d, e, es)     # O -> O
    return RatMatrix([r1 + r2 for r1, r2 in zip(tl, tr)] + [r1 + r2 for r1, r2 in zip(bl, br)])


def iota_bar(h: HBMatrix) -> GSpElement:
    q = g_prime_check(h)
    if q is None:
        raise NotInGPrime("det(h) is not a nonzero rational")
    return GSpElement(iota_bar_matrix(h), q)


# --- half-space points -------------------------------------------------------------

def totally_positive(x: FieldElement, start_precision: int = 16) -> bool:
    """Certified test that every real embedding of x is > 0."""
    if x.is_zero() or x.norm() == 0:
        return False
    p = start_precision
    while True:
        ivs = real_embeddings(x.field, p).embed(x)
        if all(iv.lo > 0 for iv in ivs):
            return True
        if any(iv.hi < 0 for iv in ivs):
            return False
        p *= 2


@dataclass(frozen=True, eq=False)
class HBPoint:
    """``tau = re + i*im`` in ``F (x) Q(i)``."""

    re: FieldElement
    im: FieldElement
    orientation: int = 1

    def __post_init__(self):
        if self.re.field is not self.im.field:
            raise ValueError("re and im must lie in the same field")
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        if not totally_positive(self.im * self.orientation):
            raise NotUpperHalf("imaginary part is not totally positive" if self.orientation == 1
                               else "imaginary part is not totally negative")

    @property
    def field(self) -> NumberField:
        return self.re.field

    def __eq__(self, other) -> bool:
        return (isinstance(other, HBPoint) and self.re == other.re and self.im == other.im)

    def __hash__(self) -> int:
        return hash((self.re, self.im))


@dataclass(frozen=True, eq=False)
class SiegelPoint:
    """``tau = re + i*im`` with rational symmetric g x g matrices."""

    re: RatMatrix
    im: RatMatrix
    orientation: int = 1

    def __post_init__(self):
        if self.re.shape != self.im.shape or not self.re.is_square():
            raise ValueError("re and im must be square of the same size")
        if not (self.re.is_symmetric() and self.im.is_symmetric()):
            raise ValueError("Siegel points are symmetric")
        if not self.im.scale(self.orientation).is_positive_definite():
            raise NotUpperHalf("imaginary part is not definite with the stated sign")

    @property
    def genus(self) -> int:
        return self.re.nrows

    def __eq__(self, other) -> bool:
        return isinstance(other, SiegelPoint) and self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))


def iota_point(tau: HBPoint) -> SiegelPoint:
    """``R'^-1 tau* R``, i.e. entry (j, k) = ``Tr(tau e_j e_k)``."""
    if tau.orientation != 1:
        raise NotUpperHalf("iota_point is defined on the upper half-space")
    nf = tau.field
    e = nf.basis
    re = RatMatrix([[(tau.re * a * b).trace() for b in e] for a in e])
    im = RatMatrix([[(tau.im * a * b).trace() for b in e] for a in e])
    return SiegelPoint(re, im, 1)


# --- F (x) Q(i) arithmetic and the Hilbert action ----------------------------------

def _cmul(x, y):
    (a, b), (c, d) = x, y
    return a * c - b * d, a * d + b * c


def _cinv(x):
    a, b = x
    n = a * a + b * b
    try:
        ninv = n.inverse()
    except DivisionByZero:
        raise SingularDenominator("c*tau + d is not invertible") from None
    return a * ninv, -b * ninv


def hb_action(h: HBMatrix, tau: HBPoint) -> HBPoint:
    """``(a tau + b)(c tau + d)^-1`` computed in ``F (x) Q(i)``."""
    if not sl_dm_o_check(h):
        q = g_prime_check(h)
        if q is None or q <= 0:
            raise NotInGPrime("h must lie in SL(D^-1 + O) or have totally positive rational det")
    t = (tau.re, tau.im)
    num = _cmul((h.a, h.a.field.zero), t)
    num = (num[0] + h.b, num[1])
    den = _cmul((h.c, h.c.field.zero), t)
    den = (den[0] + h.d, den[1])
    re, im = _cmul(num, _cinv(den))
    return HBPoint(re, im, tau.orientation)


# --- Siegel action -------------------------------------------------------------------

def _realify(re: RatMatrix, im: RatMatrix) -> RatMatrix:
    # X + iY  ->  [[X, -Y], [Y, X]] is an algebra embedding M_g(Q(i)) -> M_2g(Q)
    return RatMatrix.blocks(re, -im, im, re)


def siegel_action(m: GSpElement, tau: SiegelPoint) -> SiegelPoint:
    """``(A tau + B)(C tau + D)^-1`` exactly over Q(i)."""
    if m.nu <= 0:
        raise InputError("similitude factor must be positive to preserve the half-space")
    A, B, C, D = m.m.split2()
    if A.nrows != tau.genus:
        raise ValueError("genus mismatch")
    num = _realify(A @ tau.re + B, A @ tau.im)
    den = _realify(C @ tau.re + D, C @ tau.im)
    try:
        q = num @ den.inverse()
    except SingularMatrix:
        raise SingularDenominator("C tau + D is not invertible") from None
    g = tau.genus
    re, im = q.block(0, g, 0, g), q.block(g, 2 * g, 0, g)
    if not (re.is_symmetric() and im.is_symmetric()):
        raise AssertionError("Moebius image is not symmetric")  # pragma: no cover
    return SiegelPoint(re, im, tau.orientation)


# --- verification ------------------------------------------------------------------

def check_equivariance(h: HBMatrix, tau: HBPoint) -> bool:
    lhs = iota_point(hb_action(h, tau))
    rhs = siegel_action(iota_bar(h), iota_point(tau))
    return lhs == rhs


def check_symplectic_compat(nf: NumberField) -> bool:
    return trace_form_gram(nf) == standard_form(nf.degree)


def check_iota_bar_similitude(h: HBMatrix) -> bool:
    """``iota_bar(h)`` is a similitude whose factor is ``det h``."""
    m = iota_bar_matrix(h)
    return gsp_check(m) == g_prime_check(h)
