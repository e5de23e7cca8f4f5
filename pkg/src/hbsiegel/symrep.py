"""Symmetric powers of the standard 2g-dimensional representation.

An element of ``Sym^k Q^2g`` is a homogeneous polynomial of degree k in the
basis vectors ``x_1, ..., x_2g``, stored sparsely as exponent tuple -> coeff.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterator, Mapping, Sequence

from .errors import DegreeMismatch, DegreeZero, SingularMatrix, WrongLength
from .linalg import RatMatrix, format_fraction, parse_fraction, to_fraction

Exponent = tuple  # tuple[int, ...] of length 2g


@dataclass(frozen=True, eq=False)
class SymTensor:
    g: int
    k: int
    terms: Mapping[Exponent, Fraction] = field(default_factory=dict)
    twist: int = 0

    def __post_init__(self):
        clean = {}
        for alpha, c in dict(self.terms).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != 2 * self.g or any(a < 0 for a in alpha):
                raise ValueError(f"bad exponent {alpha} for g={self.g}")
            if sum(alpha) != self.k:
                raise DegreeMismatch(f"exponent {alpha} does not have degree {self.k}")
            c = to_fraction(c)
            if c:
                clean[alpha] = clean.get(alpha, Fraction(0)) + c
        object.__setattr__(self, "terms", {a: c for a, c in clean.items() if c})

    @classmethod
    def zero(cls, g: int, k: int) -> SymTensor:
        return cls(g, k, {})

    @classmethod
    def monomial(cls, alpha: Sequence[int], coeff=1) -> SymTensor:
        alpha = tuple(alpha)
        return cls(len(alpha) // 2, sum(alpha), {alpha: coeff})

    def __eq__(self, other) -> bool:
        return (isinstance(other, SymTensor) and (self.g, self.k, self.twist) ==
                (other.g, other.k, other.twist) and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.g, self.k, frozenset(self.terms.items())))

    def _check(self, other: SymTensor) -> None:
        if (self.g, self.k) != (other.g, other.k):
            raise DegreeMismatch("tensors live in different symmetric powers")

    def __add__(self, other: SymTensor) -> SymTensor:
        self._check(other)
        t = dict(self.terms)
        for a, c in other.terms.items():
            t[a] = t.get(a, Fraction(0)) + c
        return SymTensor(self.g, self.k, t, self.twist)

    def scale(self, c) -> SymTensor:
        c = to_fraction(c)
        return SymTensor(self.g, self.k, {a: c * x for a, x in self.terms.items()}, self.twist)

    def __sub__(self, other: SymTensor) -> SymTensor:
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list[dict]:
        return [{"exponents": list(a), "coeff": format_fraction(c), "twist": self.twist}
                for a, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, g: int, k: int, records: list[dict]) -> SymTensor:
        twists = {int(r.get("twist", 0)) for r in records}
        if len(twists) > 1:
            raise ValueError("mixed Tate twists in one tensor")
        return cls(g, k, {tuple(r["exponents"]): parse_fraction(r["coeff"]) for r in records},
                   twists.pop() if twists else 0)


@dataclass(frozen=True)
class DualVector:
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(to_fraction(x) for x in self.components))


def sym_dim(g: int, k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    return comb(2 * g + k - 1, k)


def monomials(g: int, k: int) -> Iterator[Exponent]:
    """Every exponent vector of length 2g and total degree k."""
    n = 2 * g
    for combo in combinations_with_replacement(range(n), k):
        alpha = [0] * n
        for i in combo:
            alpha[i] += 1
        yield tuple(alpha)


# --- polynomial helpers -------------------------------------------------------------

def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for a, x in p.items():
        for b, y in q.items():
            e = tuple(i + j for i, j in zip(a, b))
            out[e] = out.get(e, Fraction(0)) + x * y
    return {e: c for e, c in out.items() if c}


def sym_action(m: RatMatrix, v: SymTensor) -> SymTensor:
    """Induced action on ``Sym^k``: substitute ``x_i -> sum_j m[j][i] x_j``."""
    n = 2 * v.g
    if m.shape != (n, n):
        raise DegreeMismatch(f"matrix of shape {m.shape} does not act on Sym^k Q^{n}")
    if m.det() == 0:
        raise SingularMatrix("matrix is not invertible")
    unit = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    images = [{unit[j]: m[j, i] for j in range(n) if m[j, i]} for i in range(n)]
    one = {tuple([0] * n): Fraction(1)}
    powers: dict[tuple[int, int], dict] = {}

    def power(i: int, e: int) -> dict:
        if e == 0:
            return one
        key = (i, e)
        if key not in powers:
            powers[key] = _poly_mul(power(i, e - 1), images[i])
        return powers[key]

    out: dict = {}
    for alpha, c in v.terms.items():
        term = {tuple([0] * n): c}
        for i, e in enumerate(alpha):
            if e:
                term = _poly_mul(term, power(i, e))
        for a, x in term.items():
            out[a] = out.get(a, Fraction(0)) + x
    return SymTensor(v.g, v.k, out, v.twist)


def dual_action(m: RatMatrix, phi: DualVector) -> DualVector:
    """Contragredient action: ``phi -> m^-T phi``."""
    return DualVector(m.inverse().T.apply(phi.components))


def contraction(v: SymTensor, phi: DualVector) -> SymTensor:
    """``Sym^(k+1) (x) dual -> Sym^k``: ``x^a (x) phi -> sum_i a_i phi_i x^(a - delta_i)``."""
    if v.k < 1:
        raise DegreeZero("cannot contract a degree-0 tensor")
    if len(phi.components) != 2 * v.g:
        raise DegreeMismatch("dual vector has the wrong length")
    out: dict = {}
    for alpha, c in v.terms.items():
        for i, (a, p) in enumerate(zip(alpha, phi.components)):
            if a and p:
                beta = alpha[:i] + (a - 1,) + alpha[i + 1:]
                out[beta] = out.get(beta, Fraction(0)) + a * p * c
    return SymTensor(v.g, v.k - 1, out, v.twist)


def product_projection(components: Mapping[int, SymTensor], k: int, g: int | None = None) -> SymTensor:
    """Degree-k factor of an element of ``prod_k Sym^k``; zero when absent."""
    for deg, t in components.items():
        if t.k != deg:
            raise DegreeMismatch(f"component stored under {deg} has degree {t.k}")
    if k in components:
        return components[k]
    if g is None:
        if not components:
            raise ValueError("genus unknown for an empty product; pass g")
        g = next(iter(components.values())).g
    return SymTensor.zero(g, k)


def inject(t: SymTensor) -> dict[int, SymTensor]:
    return {t.k: t}


@dataclass(frozen=True)
class ObstructionReport:
    verdict: str
    r: int
    weights: tuple
    doubled: tuple
    required: tuple

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "r": self.r, "weights": list(self.weights),
                "doubled": list(self.doubled), "required": list(self.required)}


def parity_obstruction(w: Sequence[int], r: int) -> ObstructionReport:
    """Compare the weights of ``h_r o w`` forced by a factorisation through ``z -> z zbar``.

    Such a factorisation doubles every weight of the cocharacter, whereas
    ``h_r o w`` is ``x -> diag(x, ..., x)`` with all 2r weights equal to 1.
    An even multiset never equals the all-ones one.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    w = tuple(int(x) for x in w)
    if len(w) != 2 * r:
        raise WrongLength(f"expected {2 * r} weights, got {len(w)}")
    doubled = tuple(sorted(2 * x for x in w))
    required = (1,) * (2 * r)
    verdict = "CONTRADICTION" if doubled != required else "CONSISTENT"
    return ObstructionReport(verdict, r, w, doubled, required)
