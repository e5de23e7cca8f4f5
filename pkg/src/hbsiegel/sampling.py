"""Seeded random generators for property checks.

Group elements are words in elementary unipotents, so membership holds by
construction. Every trial gets its own ``random.Random`` derived from
``(seed, label, index)``; trials can therefore run in any order or in
parallel and still reproduce.
"""
from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .linalg import RatMatrix
from .modembed import HBPoint
from .numfield import FieldElement, NumberField
from .symplectic import HBMatrix
from .torsion import HBTorsionPoint


def trial_rng(seed: int, label: str, index: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{label}:{index}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _ints(rng: random.Random, n: int, bound: int) -> list[int]:
    return [rng.randint(-bound, bound) for _ in range(n)]


def random_rational(rng: random.Random, bound: int = 5, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_element(nf: NumberField, rng: random.Random, bound: int = 3, max_den: int = 3) -> FieldElement:
    return nf.element(random_rational(rng, bound, max_den) for _ in range(nf.degree))


def random_nonzero_element(nf: NumberField, rng: random.Random, **kw) -> FieldElement:
    while True:
        x = random_element(nf, rng, **kw)
        if x.norm() != 0:
            return x


def _combo(basis, coeffs, zero):
    return sum((e * c for e, c in zip(basis, coeffs)), zero)


def random_order_element(nf: NumberField, rng: random.Random, bound: int = 2) -> FieldElement:
    return _combo(nf.basis, _ints(rng, nf.degree, bound), nf.zero)


def random_dinv_element(nf: NumberField, rng: random.Random, bound: int = 2) -> FieldElement:
    return _combo(nf.dual_basis, _ints(rng, nf.degree, bound), nf.zero)


def random_different_element(nf: NumberField, rng: random.Random, bound: int = 2) -> FieldElement:
    return _combo(nf.different_basis, _ints(rng, nf.degree, bound), nf.zero)


def random_sl_dmo(nf: NumberField, rng: random.Random, max_len: int = 12,
                  level: int = 1, bound: int = 2) -> HBMatrix:
    """Word in ``[[1, n b], [0, 1]]`` (b in D^-1) and ``[[1, 0], [n c, 1]]`` (c in D).

    ``level=1`` samples SL(D^-1 + O); ``level=n`` samples Gamma'(n).
    """
    one, zero = nf.one, nf.zero
    h = HBMatrix.identity(nf)
    upper = rng.random() < 0.5
    for _ in range(rng.randint(1, max_len)):
        if upper:
            step = HBMatrix(one, random_dinv_element(nf, rng, bound) * level, zero, one)
        else:
            step = HBMatrix(one, zero, random_different_element(nf, rng, bound) * level, one)
        h = h @ step
        upper = not upper
    return h


def random_g_prime(nf: NumberField, rng: random.Random, max_len: int = 6,
                   positive: bool = True) -> HBMatrix:
    """A G'(Q) element ``w diag(u, q/u)`` with rational det q (positive if asked)."""
    q = Fraction(rng.randint(1, 5), rng.randint(1, 5))
    if not positive and rng.random() < 0.5:
        q = -q
    u = random_nonzero_element(nf, rng)
    diag = HBMatrix(u, nf.zero, nf.zero, u.inverse() * q)
    return random_sl_dmo(nf, rng, max_len) @ diag


def random_totally_positive(nf: NumberField, rng: random.Random) -> FieldElement:
    """``q + y1^2 + y2^2`` with q > 0 rational."""
    y1, y2 = random_element(nf, rng, 2, 2), random_element(nf, rng, 2, 2)
    return y1 * y1 + y2 * y2 + Fraction(rng.randint(1, 4), rng.randint(1, 4))


def random_hb_point(nf: NumberField, rng: random.Random) -> HBPoint:
    return HBPoint(random_element(nf, rng), random_totally_positive(nf, rng), 1)


def random_hb_torsion(nf: NumberField, rng: random.Random, n: int) -> HBTorsionPoint:
    g = nf.degree
    v = [Fraction(rng.randrange(n), n) for _ in range(2 * g)]
    return HBTorsionPoint.from_lattice_coords(nf, v, n)


# --- rational symplectic matrices --------------------------------------------------

def _random_symmetric(rng: random.Random, g: int, bound: int) -> RatMatrix:
    s = [[0] * g for _ in range(g)]
    for i in range(g):
        for j in range(i, g):
            s[i][j] = s[j][i] = rng.randint(-bound, bound)
    return RatMatrix(s)


def random_gamma_n(g: int, n: int, rng: random.Random, max_len: int = 8, bound: int = 2) -> RatMatrix:
    """Word in ``[[I, n S], [0, I]]`` and ``[[I, 0], [n S, I]]`` with S symmetric integral."""
    ident, zero = RatMatrix.identity(g), RatMatrix.zeros(g)
    m = RatMatrix.identity(2 * g)
    upper = rng.random() < 0.5
    for _ in range(rng.randint(1, max_len)):
        s = _random_symmetric(rng, g, bound).scale(n)
        step = RatMatrix.blocks(ident, s, zero, ident) if upper else RatMatrix.blocks(ident, zero, s, ident)
        m = m @ step
        upper = not upper
    return m


def random_gsp(g: int, rng: random.Random, max_len: int = 4) -> RatMatrix:
    """Random rational similitude: a Sp(2g, Z) word times ``diag(lam I, I)``."""
    lam = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    scale = RatMatrix.diag([lam] * g + [1] * g)
    return random_gamma_n(g, 1, rng, max_len) @ scale
