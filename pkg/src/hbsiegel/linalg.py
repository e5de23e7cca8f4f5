"""Dense exact linear algebra over Q.

Matrices are small (at most 2g x 2g with g a field degree), so everything is
plain Python lists of :class:`fractions.Fraction` and Gauss-Jordan elimination.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import SingularMatrix


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int, str or Fraction")
    return Fraction(x)


class RatMatrix:
    """Immutable row-major matrix of Fractions."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        if not data:
            raise ValueError("empty matrix")
        width = len(data[0])
        if width == 0 or any(len(r) != width for r in data):
            raise ValueError("ragged or empty rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    # construction helpers

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int | None = None) -> RatMatrix:
        return cls([[0] * (r if c is None else c) for _ in range(r)])

    @classmethod
    def scalar(cls, n: int, value) -> RatMatrix:
        return cls([[value if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def blocks(cls, tl: RatMatrix, tr: RatMatrix, bl: RatMatrix, br: RatMatrix) -> RatMatrix:
        top = [a + b for a, b in zip(tl._rows, tr._rows)]
        bottom = [a + b for a, b in zip(bl._rows, br._rows)]
        return cls(top + bottom)

    @classmethod
    def diag(cls, values: Sequence) -> RatMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    # accessors

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> RatMatrix:
        return RatMatrix([r[c0:c1] for r in self._rows[r0:r1]])

    def split2(self) -> tuple[RatMatrix, RatMatrix, RatMatrix, RatMatrix]:
        """The four g x g blocks of a 2g x 2g matrix."""
        n = self.nrows
        if n != self.ncols or n % 2:
            raise ValueError("split2 needs an even square matrix")
        g = n // 2
        return (self.block(0, g, 0, g), self.block(0, g, g, n),
                self.block(g, n, 0, g), self.block(g, n, g, n))

    def entries(self) -> Iterable[Fraction]:
        for r in self._rows:
            yield from r

    # arithmetic

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"RatMatrix([{body}])"

    def _check_same(self, other: RatMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: RatMatrix) -> RatMatrix:
        self._check_same(other)
        return RatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        self._check_same(other)
        return RatMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __neg__(self) -> RatMatrix:
        return RatMatrix([[-a for a in r] for r in self._rows])

    def scale(self, c) -> RatMatrix:
        c = to_fraction(c)
        return RatMatrix([[c * a for a in r] for r in self._rows])

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.ncols)]
        return RatMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                          for r in self._rows])

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * to_fraction(b) for a, b in zip(r, v)), Fraction(0)) for r in self._rows)

    @property
    def T(self) -> RatMatrix:
        return RatMatrix(zip(*self._rows))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self == self.T

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries())

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("det of non-square matrix")
        a = [list(r) for r in self._rows]
        n = self.nrows
        d = Fraction(1)
        for i in range(n):
            p = next((k for k in range(i, n) if a[k][i] != 0), None)
            if p is None:
                return Fraction(0)
            if p != i:
                a[i], a[p] = a[p], a[i]
                d = -d
            piv = a[i][i]
            d *= piv
            for k in range(i + 1, n):
                f = a[k][i] / piv
                if f:
                    a[k] = [x - f * y for x, y in zip(a[k], a[i])]
        return d

    def inverse(self) -> RatMatrix:
        if not self.is_square():
            raise ValueError("inverse of non-square matrix")
        n = self.nrows
        return RatMatrix(solve_many(self, RatMatrix.identity(n)).rows)

    def leading_minors(self) -> list[Fraction]:
        return [self.block(0, k, 0, k).det() for k in range(1, self.nrows + 1)]

    def is_positive_definite(self) -> bool:
        """Sylvester's criterion; assumes symmetry."""
        return self.is_symmetric() and all(m > 0 for m in self.leading_minors())


def solve_many(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Solve ``a X = b`` for square invertible ``a``."""
    n = a.nrows
    if not a.is_square() or b.nrows != n:
        raise ValueError("solve: shape mismatch")
    m = [list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)]
    w = len(m[0])
    for i in range(n):
        p = next((k for k in range(i, n) if m[k][i] != 0), None)
        if p is None:
            raise SingularMatrix("matrix is not invertible")
        m[i], m[p] = m[p], m[i]
        piv = m[i][i]
        if piv != 1:
            m[i] = [x / piv for x in m[i]]
        for k in range(n):
            if k != i and m[k][i] != 0:
                f = m[k][i]
                m[k] = [x - f * y for x, y in zip(m[k], m[i])]
    return RatMatrix([r[n:w] for r in m])


def solve(a: RatMatrix, v: Sequence) -> tuple[Fraction, ...]:
    sol = solve_many(a, RatMatrix([[x] for x in v]))
    return sol.col(0)


def common_denominator(values: Iterable[Fraction]) -> int:
    d = 1
    for x in values:
        d = lcm(d, x.denominator)
    return d


def integer_row_basis(vectors: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Z-basis (in Hermite normal form) of the lattice spanned by ``vectors``.

    The vectors are rational; they are scaled to integers, reduced by
    extended-gcd row operations, and scaled back.
    """
    vecs = [[to_fraction(x) for x in v] for v in vectors]
    if not vecs:
        return []
    dim = len(vecs[0])
    den = common_denominator(x for v in vecs for x in v)
    rows = [[int(x * den) for x in v] for v in vecs]
    basis: list[list[int]] = []
    col = 0
    while rows and col < dim:
        live = [r for r in rows if r[col] != 0]
        dead = [r for r in rows if r[col] == 0]
        if not live:
            col += 1
            continue
        # Euclid on column `col` until a single row has a nonzero entry there.
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            nxt = []
            for r in live[1:]:
                q = r[col] // pivot[col]
                r = [x - q * y for x, y in zip(r, pivot)]
                (nxt if r[col] != 0 else dead).append(r)
            live = [pivot] + nxt
        pivot = live[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        rows = [r for r in dead if any(r)]
        col += 1
    # reduce entries above pivots
    for i in range(len(basis)):
        pc = next(j for j, x in enumerate(basis[i]) if x)
        for k in range(i):
            q = basis[k][pc] // basis[i][pc]
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], basis[i])]
    return [[Fraction(x, den) for x in r] for r in basis]


def dual_lattice_basis(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of ``{w : r . w in Z for all rows r}`` for a full-rank row set."""
    b = integer_row_basis(rows)
    m = RatMatrix(b)
    if not m.is_square():
        raise SingularMatrix("row lattice is not of full rank")
    inv = m.inverse()
    return [list(inv.col(j)) for j in range(inv.ncols)]


def parse_fraction(s) -> Fraction:
    """Parse ``"num/den"``, an integer string, or an int."""
    if isinstance(s, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise TypeError(f"cannot read rational from {s!r}")


def format_fraction(x: Fraction) -> str:
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec_is_integral(v: Iterable[Fraction]) -> bool:
    return all(to_fraction(x).denominator == 1 for x in v)


def frac_mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def vec_gcd_order(v: Iterable[Fraction]) -> int:
    """Smallest k >= 1 with k*v integral."""
    return common_denominator(to_fraction(x) for x in v)


__all__ = [
    "RatMatrix", "solve", "solve_many", "integer_row_basis", "dual_lattice_basis",
    "parse_fraction", "format_fraction", "to_fraction", "vec_is_integral",
    "frac_mod1", "vec_gcd_order", "common_denominator",
]
