"""Candidate codimension-one components of Bernstein-Sato zero loci.

Every dense edge E contributes the affine hyperplanes

    sum_k d_{E,k} s_k + rank(E) + v = 0,    0 <= v <= Q_E,

in the s-space of a factorization F = (f_1, ..., f_r).  These are
candidates only: the bound is one-directional.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arrangement import Arrangement, Flat, Lattice
from .errors import InputError, NotEssentialCenter


@dataclass(frozen=True)
class Factorization:
    blocks: tuple  # tuples of 0-based hyperplane indices

    @property
    def r(self) -> int:
        return len(self.blocks)

    def is_linear(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def block_of(self, k: int) -> int:
        for i, b in enumerate(self.blocks):
            if k in b:
                return i
        raise KeyError(k)


def make_factorization(A: Arrangement, blocks: Sequence[Sequence] | None = None) -> Factorization:
    """Build and check a partition of the hyperplanes.

    Blocks list 1-based indices or hyperplane labels; ``None`` means the
    trivial factorization F = (f).
    """
    if blocks is None:
        return Factorization((tuple(range(A.d)),))
    out = []
    for block in blocks:
        idx = []
        for item in block:
            if isinstance(item, str) and not item.lstrip("-").isdigit():
                if item not in A.labels:
                    raise InputError(f"unknown hyperplane label {item!r}")
                idx.append(A.labels.index(item))
            else:
                k = int(item)
                if not 1 <= k <= A.d:
                    raise InputError(f"hyperplane index {k} outside 1..{A.d}")
                idx.append(k - 1)
        if not idx:
            raise InputError("empty block in factorization")
        out.append(tuple(sorted(idx)))
    flat = [k for b in out for k in b]
    if len(flat) != len(set(flat)) or set(flat) != set(range(A.d)):
        raise InputError("factorization blocks must partition the hyperplanes")
    return Factorization(tuple(out))


def linear_factorization(A: Arrangement) -> Factorization:
    return Factorization(tuple((k,) for k in range(A.d)))


@dataclass(frozen=True)
class CandidateComponent:
    flat_id: int
    hset: tuple
    rank: int
    coeffs: tuple  # ((block index, d_{E,k}), ...) with d_{E,k} > 0
    v: int
    q_bound: int
    case: str

    @property
    def constant(self) -> int:
        return self.rank + self.v

    @property
    def d_E(self) -> int:
        return sum(c for _, c in self.coeffs)

    def to_str(self) -> str:
        terms = []
        for k, c in self.coeffs:
            terms.append(f"s{k + 1}" if c == 1 else f"{c}*s{k + 1}")
        return " + ".join(terms) + f" + {self.constant}"


def q_bound(A: Arrangement, F: Factorization, E: Flat, is_center: bool) -> tuple[int, str]:
    dE = len(E.hset)
    if F.is_linear():
        return 2 * dE - E.rank - min(2, E.rank), "linear"
    if is_center:
        return 2 * dE - E.rank - min(2, E.rank), "center"
    return 2 * dE - E.rank - 1, "general"


def candidates(A: Arrangement, L: Lattice, F: Factorization | None = None) -> list[CandidateComponent]:
    if F is None:
        F = make_factorization(A)
    if any(G.dense is None for G in L.flats):
        raise ValueError("lattice has no density flags; run dense_flags first")
    top = L.top
    essential = top.rank == A.nvars
    out = []
    for E in L.flats:
        if not E.dense:
            continue
        is_max = E.hset == top.hset
        if is_max and not essential and not F.is_linear():
            warnings.warn(
                f"maximal flat has rank {top.rank} < {A.nvars}; it is not the origin, "
                "using the non-central bound", NotEssentialCenter, stacklevel=2)
        Q, case = q_bound(A, F, E, is_max and essential)
        counts: dict[int, int] = {}
        for k in E.hset:
            b = F.block_of(k)
            counts[b] = counts.get(b, 0) + 1
        coeffs = tuple(sorted(counts.items()))
        for v in range(Q + 1):
            out.append(CandidateComponent(E.id, E.hset, E.rank, coeffs, v, Q, case))
    return out


def univariate_roots(A: Arrangement, L: Lattice) -> tuple[list[Fraction], bool | None]:
    """Candidate roots for the trivial factorization and the interval verdict.

    The verdict says whether all candidates lie in (-2 + 1/d, 0); it is None
    for a single hyperplane (smooth), where no interval claim is made.
    """
    comps = candidates(A, L, make_factorization(A))
    roots = sorted({Fraction(-c.constant, c.d_E) for c in comps}, reverse=True)
    if A.d < 2:
        return roots, None
    lo = Fraction(-2) + Fraction(1, A.d)
    return roots, all(lo < r < 0 for r in roots)
