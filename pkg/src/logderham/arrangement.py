"""Central hyperplane arrangements and their intersection lattices."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from .algebra import LinearForm, Polynomial, as_fraction
from .errors import EmptyArrangement, MismatchedArity, NotReduced, ZeroForm
from .linalg import rank as matrix_rank, solve


def canonical_coefficients(coeffs: Sequence) -> tuple[Fraction, ...]:
    """Clear denominators, divide out the content, make the first entry positive."""
    fr = [as_fraction(c) for c in coeffs]
    if not any(fr):
        raise ZeroForm("hyperplane with all-zero coefficients")
    den = lcm(*(c.denominator for c in fr))
    ints = [c.numerator * (den // c.denominator) for c in fr]
    g = reduce(gcd, ints)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


@dataclass(frozen=True)
class Arrangement:
    nvars: int
    hyperplanes: tuple  # LinearForm
    labels: tuple = ()
    variables: tuple = ()

    @property
    def d(self) -> int:
        return len(self.hyperplanes)

    @property
    def names(self) -> tuple:
        return self.variables or tuple(f"x{i + 1}" for i in range(self.nvars))

    def normals(self, hset=None) -> list[list[Fraction]]:
        idx = range(self.d) if hset is None else hset
        return [list(self.hyperplanes[k].coefficients) for k in idx]

    def rank_of(self, hset) -> int:
        hset = list(hset)
        return matrix_rank(self.normals(hset)) if hset else 0

    @property
    def rank(self) -> int:
        return self.rank_of(range(self.d))

    @property
    def is_essential(self) -> bool:
        return self.rank == self.nvars

    def defining_polynomial(self) -> Polynomial:
        f = Polynomial.constant(self.nvars, 1)
        for ell in self.hyperplanes:
            f = f * ell.as_polynomial()
        return f

    def label(self, k: int) -> str:
        if self.labels:
            return self.labels[k]
        return self.hyperplanes[k].as_polynomial().to_str(self.names)

    def permuted(self, order: Sequence[int]) -> "Arrangement":
        labels = tuple(self.labels[k] for k in order) if self.labels else ()
        return replace(self, hyperplanes=tuple(self.hyperplanes[k] for k in order), labels=labels)


def validate(raw: Sequence[Sequence], labels: Sequence[str] | None = None,
             variables: Sequence[str] | None = None) -> Arrangement:
    """Canonicalize a list of coefficient vectors into an :class:`Arrangement`."""
    raw = [list(r) for r in raw]
    if not raw:
        raise EmptyArrangement("an arrangement needs at least one hyperplane")
    n = len(raw[0])
    if n == 0:
        raise MismatchedArity("hyperplanes need at least one coordinate")
    if any(len(r) != n for r in raw):
        raise MismatchedArity("coefficient vectors have different lengths")
    if variables is not None and len(variables) != n:
        raise MismatchedArity(f"{len(variables)} variable names for {n} coordinates")
    if labels is not None and len(labels) != len(raw):
        raise MismatchedArity("label count differs from hyperplane count")
    seen = {}
    forms = []
    for k, r in enumerate(raw):
        canon = canonical_coefficients(r)
        if canon in seen:
            raise NotReduced(f"hyperplanes {seen[canon] + 1} and {k + 1} are proportional")
        seen[canon] = k
        forms.append(LinearForm(canon))
    return Arrangement(n, tuple(forms), tuple(labels or ()), tuple(variables or ()))


@dataclass(frozen=True)
class Flat:
    id: int
    hset: tuple
    rank: int
    mobius: int = 0
    dense: bool | None = None


@dataclass(frozen=True)
class Lattice:
    flats: tuple
    arrangement: Arrangement = field(repr=False, compare=False)

    def __iter__(self):
        return iter(self.flats)

    def __len__(self):
        return len(self.flats)

    def by_hset(self, hset) -> Flat:
        key = tuple(sorted(hset))
        for F in self.flats:
            if F.hset == key:
                return F
        raise KeyError(key)

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    @property
    def top(self) -> Flat:
        return max(self.flats, key=lambda F: (len(F.hset), F.rank))

    def below(self, F: Flat) -> list[Flat]:
        """Flats strictly contained in F (as hyperplane sets)."""
        s = set(F.hset)
        return [G for G in self.flats if len(G.hset) < len(s) and s.issuperset(G.hset)]

    def rank_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for F in self.flats:
            out[F.rank] = out.get(F.rank, 0) + 1
        return out


def closure(A: Arrangement, hset) -> tuple:
    hset = sorted(set(hset))
    r = A.rank_of(hset)
    out = set(hset)
    for k in range(A.d):
        if k not in out and A.rank_of(hset + [k]) == r:
            out.add(k)
    return tuple(sorted(out))


def flats(A: Arrangement) -> Lattice:
    """Breadth-first enumeration of all closure-flats."""
    start = closure(A, ())
    found = {start: A.rank_of(start)}
    queue = deque([start])
    while queue:
        F = queue.popleft()
        members = set(F)
        for h in range(A.d):
            if h in members:
                continue
            G = closure(A, F + (h,))
            if G not in found:
                found[G] = A.rank_of(G)
                queue.append(G)
    ordered = sorted(found.items(), key=lambda kv: (kv[1], len(kv[0]), kv[0]))
    return Lattice(tuple(Flat(i, h, r) for i, (h, r) in enumerate(ordered)), A)


def mobius_poincare(L: Lattice) -> tuple[Lattice, list[int], list[int]]:
    """Attach Mobius values; return (lattice, Poincare coefficients, OS Betti numbers).

    The Poincare polynomial sum_F mu(F) (-t)^rank(F) has non-negative
    coefficients, which are the Orlik-Solomon Betti numbers.
    """
    mu: dict[tuple, int] = {}
    new_flats = []
    for F in L.flats:  # sorted by rank, so every proper subflat comes first
        if not F.hset and F.rank == 0:
            val = 1
        else:
            val = -sum(mu[G.hset] for G in L.below(F))
        mu[F.hset] = val
        new_flats.append(replace(F, mobius=val))
    n = L.arrangement.nvars
    poincare = [0] * (n + 1)
    for F in new_flats:
        poincare[F.rank] += F.mobius * (-1) ** F.rank
    return Lattice(tuple(new_flats), L.arrangement), poincare, list(poincare)


def matroid_components(vectors: Sequence[Sequence]) -> list[set[int]]:
    """Connected components of the vector matroid via fundamental circuits."""
    m = len(vectors)
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    basis: list[int] = []
    for e in range(m):
        if matrix_rank([vectors[b] for b in basis + [e]]) > len(basis):
            basis.append(e)
    if basis:
        # columns are basis vectors; solve B c = v_e
        cols = [[vectors[b][i] for b in basis] for i in range(len(vectors[0]))]
        for e in range(m):
            if e in basis:
                continue
            c = solve(cols, vectors[e])
            for b, coeff in zip(basis, c):
                if coeff:
                    union(e, b)
    comps: dict[int, set[int]] = {}
    for e in range(m):
        comps.setdefault(find(e), set()).add(e)
    return sorted(comps.values(), key=min)


def is_connected(vectors: Sequence[Sequence]) -> bool:
    return len(vectors) > 0 and len(matroid_components(vectors)) == 1


def dense_flags(A: Arrangement, L: Lattice) -> Lattice:
    out = []
    for F in L.flats:
        dense = F.rank >= 1 and is_connected(A.normals(F.hset))
        out.append(replace(F, dense=dense))
    return Lattice(tuple(out), L.arrangement)


def intersection_lattice(A: Arrangement) -> tuple[Lattice, list[int]]:
    """Flats with Mobius values and density attached, plus OS Betti numbers."""
    L, _, betti = mobius_poincare(flats(A))
    return dense_flags(A, L), betti
