"""Exact rank, kernel and solve over Q by fraction-free elimination.

Rows are cleared of denominators and reduced with the Bareiss
Gauss-Jordan recurrence

    a_ij <- (p * a_ij - a_ic * a_rj) / p_prev

which keeps every entry an integer (all divisions are exact).  Pivots are
taken row-first, first nonzero column, so results are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence

from .algebra import as_fraction
from .errors import Inconsistent


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major Fractions

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(as_fraction(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RatMatrix":
        cols = len(columns)
        data = [[Fraction(0)] * cols for _ in range(rows)]
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("column length mismatch")
            for i, x in enumerate(col):
                data[i][j] = as_fraction(x)
        return cls(rows, cols, tuple(x for r in data for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int, scale=1) -> "RatMatrix":
        s = as_fraction(scale)
        return cls(n, n, tuple(s if i == j else Fraction(0) for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a = self.to_rows()
        bcols = [other.column(j) for j in range(other.cols)]
        out = []
        for r in a:
            nz = [(k, x) for k, x in enumerate(r) if x]
            for c in bcols:
                out.append(sum((x * c[k] for k, x in nz), Fraction(0)))
        return RatMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "RatMatrix":
        c = as_fraction(c)
        return RatMatrix(self.rows, self.cols, tuple(x * c for x in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        v = [as_fraction(x) for x in vec]
        return [sum((self.entries[i * self.cols + j] * v[j] for j in range(self.cols) if v[j]), Fraction(0))
                for i in range(self.rows)]


def _integer_rows(rows) -> List[List[int]]:
    out = []
    for r in rows:
        r = [as_fraction(x) for x in r]
        den = lcm(*(x.denominator for x in r)) if r else 1
        ints = [x.numerator * (den // x.denominator) for x in r]
        if any(ints):
            out.append(ints)
    return out


@dataclass(frozen=True)
class Echelon:
    """Fraction-free reduced row echelon form.

    ``rows[i][pivots[i]] == scale`` for every pivot row and the true RREF is
    ``rows / scale``.
    """
    rows: tuple
    pivots: tuple
    cols: int
    scale: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def free(self) -> tuple:
        piv = set(self.pivots)
        return tuple(c for c in range(self.cols) if c not in piv)


def echelon(rows, cols: int) -> Echelon:
    """Bareiss Gauss-Jordan elimination on a rational row list."""
    a = _integer_rows(rows)
    m = len(a)
    prev = 1
    r = 0
    pivots = []
    for c in range(cols):
        if r == m:
            break
        sel = next((i for i in range(r, m) if a[i][c]), None)
        if sel is None:
            continue
        if sel != r:
            a[r], a[sel] = a[sel], a[r]
        prow = a[r]
        p = prow[c]
        nz = [j for j in range(c, cols) if prow[j]]
        for i in range(m):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if f:
                new = [p * x for x in row]
                for j in nz:
                    new[j] -= f * prow[j]
                if prev != 1:
                    new = [x // prev for x in new]
                a[i] = new
            elif p != prev:
                if prev == 1:
                    a[i] = [p * x for x in row]
                else:
                    a[i] = [p * x // prev for x in row]
        prev = p
        pivots.append(c)
        r += 1
    return Echelon(tuple(tuple(x) for x in a[:r]), tuple(pivots), cols, prev)


def _rows_of(M) -> tuple[list, int]:
    if isinstance(M, RatMatrix):
        return M.to_rows(), M.cols
    rows = [list(r) for r in M]
    return rows, (len(rows[0]) if rows else 0)


def rank(M) -> int:
    rows, cols = _rows_of(M)
    return echelon(rows, cols).rank


def _normalize_integer(v: list[int]) -> list[int]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        v = [x // g for x in v]
    lead = next(x for x in v if x)
    return [-x for x in v] if lead < 0 else v


def kernel_from_echelon(E: Echelon) -> list[list[int]]:
    """One integer vector per free column, gcd 1, positive leading entry."""
    basis = []
    for f in E.free:
        v = [0] * E.cols
        v[f] = E.scale
        for row, pc in zip(E.rows, E.pivots):
            v[pc] = -row[f]
        basis.append(_normalize_integer(v))
    return basis


def kernel_basis(M) -> list[list[Fraction]]:
    rows, cols = _rows_of(M)
    return [[Fraction(x) for x in v] for v in kernel_from_echelon(echelon(rows, cols))]


def solve(M, b: Sequence) -> list[Fraction]:
    """A particular solution of ``M x = b`` (free variables set to 0).

    Raises :class:`Inconsistent` when there is none.
    """
    rows, cols = _rows_of(M)
    if len(b) != len(rows):
        raise ValueError("right-hand side length mismatch")
    aug = [r + [as_fraction(x)] for r, x in zip(rows, b)]
    E = echelon(aug, cols + 1)
    if E.pivots and E.pivots[-1] == cols:
        raise Inconsistent("system has no solution")
    x = [Fraction(0)] * cols
    for row, pc in zip(E.rows, E.pivots):
        x[pc] = Fraction(row[cols], E.scale)
    return x


class SpanCoordinates:
    """Coordinates with respect to a kernel basis from :func:`kernel_from_echelon`.

    Each basis vector is the only one nonzero on its free column, so the
    coordinate of ``b`` is read off that column; the full reconstruction is
    then compared with ``b`` exactly.
    """

    def __init__(self, vectors: Sequence[Sequence[int]], free: Sequence[int]):
        self.vectors = [list(v) for v in vectors]
        self.free = list(free)
        self.length = len(self.vectors[0]) if self.vectors else None

    def __call__(self, b: Sequence[Fraction]) -> list[Fraction]:
        coords = [Fraction(b[f]) / v[f] for v, f in zip(self.vectors, self.free)]
        recon = [Fraction(0)] * len(b)
        for c, v in zip(coords, self.vectors):
            if c:
                for i, x in enumerate(v):
                    if x:
                        recon[i] += c * x
        if recon != list(b):
            raise Inconsistent("vector lies outside the span of the basis")
        return coords
