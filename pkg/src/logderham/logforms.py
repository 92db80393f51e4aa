"""Graded pieces of the module of logarithmic forms.

A logarithmic j-form of grade q is written eta = A / f with A a j-form whose
coefficients are homogeneous of degree m = q + d - j (dx_i and x_i have
weight one, 1/f has weight -d).  Since R is factorial, eta is logarithmic
iff d(l_k) ^ A vanishes modulo l_k for every hyperplane l_k; for fixed
(j, q) these are linear conditions on the coefficients of A and the graded
piece is their kernel.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .algebra import (
    PolyForm,
    Polynomial,
    _Substitution,
    form_index,
    merge_sign,
    monomials_of_degree,
    reduce_mod_linear,
    wedge,
)
from .arrangement import Arrangement
from .errors import DegreeLimitExceeded, Inconsistent
from .linalg import SpanCoordinates, echelon, kernel_from_echelon


@dataclass(frozen=True)
class GradedBasis:
    j: int
    q: int
    numerator_degree: int
    nvars: int
    index: tuple  # ((I, monomial), ...)
    vectors: tuple  # integer coefficient vectors over ``index``
    free: tuple = field(repr=False)
    position: dict = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def elements(self) -> list[PolyForm]:
        """Numerators A of the basis forms A / f."""
        return [self.to_form(v) for v in self.vectors]

    def to_form(self, vec: Sequence) -> PolyForm:
        coeffs: dict = {}
        for (I, mono), c in zip(self.index, vec):
            if c:
                coeffs.setdefault(I, {})[mono] = Fraction(c)
        return PolyForm(self.nvars, self.j, {I: Polynomial(self.nvars, t) for I, t in coeffs.items()})

    def from_coordinates(self, coords: Sequence) -> PolyForm:
        """Numerator of the combination sum_i coords[i] * basis[i]."""
        vec = [Fraction(0)] * len(self.index)
        for c, v in zip(coords, self.vectors):
            if c:
                for i, x in enumerate(v):
                    if x:
                        vec[i] += c * x
        return self.to_form(vec)

    def vectorize(self, form: PolyForm) -> list[Fraction]:
        """Coefficient vector of a j-form over this piece's monomial index."""
        if form.degree != self.j:
            raise Inconsistent(f"expected a {self.j}-form, got degree {form.degree}")
        out = [Fraction(0)] * len(self.index)
        for I, p in form.coeffs.items():
            for mono, c in p.terms.items():
                pos = self.position.get((I, mono))
                if pos is None:
                    raise Inconsistent(f"term {mono} dx{I} has the wrong degree for grade {self.q}")
                out[pos] = c
        return out

    def coordinates(self, form: PolyForm) -> list[Fraction]:
        """Expansion of a numerator in this basis; Inconsistent if not in the span."""
        if self.dim == 0:
            if form:
                raise Inconsistent("nonzero form in a zero-dimensional piece")
            return []
        return SpanCoordinates(self.vectors, self.free)(self.vectorize(form))


def numerator_degree(A: Arrangement, j: int, q: int) -> int:
    return q + A.d - j


def constraint_rows(A: Arrangement, j: int, index: Sequence[tuple]) -> list[list[Fraction]]:
    """Stacked linear conditions d(l_k) ^ A = 0 mod l_k, one row per output coefficient."""
    n = A.nvars
    ncols = len(index)
    rows: list[list[Fraction]] = []
    if j >= n:
        return rows
    for ell in A.hyperplanes:
        sub = _Substitution(ell)
        coeffs = [(i, c) for i, c in enumerate(ell.coefficients) if c]
        table: dict[tuple, dict[int, Fraction]] = {}
        for col, (I, mono) in enumerate(index):
            reduced = sub.reduce_monomial(mono)
            for i, c in coeffs:
                if i in I:
                    continue
                s = merge_sign((i,), I)
                J = tuple(sorted(I + (i,)))
                for mm, cc in reduced.items():
                    row = table.setdefault((J, mm), {})
                    val = row.get(col, 0) + s * c * cc
                    if val:
                        row[col] = val
                    else:
                        row.pop(col, None)
        for key in sorted(table):
            entries = table[key]
            if entries:
                dense = [Fraction(0)] * ncols
                for col, val in entries.items():
                    dense[col] = val
                rows.append(dense)
    return rows


@lru_cache(maxsize=None)
def _graded_basis(A: Arrangement, j: int, q: int) -> GradedBasis:
    n = A.nvars
    m = numerator_degree(A, j, q)
    if m < 0 or j > n or j < 0:
        return GradedBasis(j, q, m, n, (), (), (), {})
    monos = monomials_of_degree(n, m)
    index = tuple((I, mono) for I in form_index(n, j) for mono in monos)
    position = {key: pos for pos, key in enumerate(index)}
    rows = constraint_rows(A, j, index)
    E = echelon(rows, len(index))
    vectors = tuple(tuple(v) for v in kernel_from_echelon(E))
    return GradedBasis(j, q, m, n, index, vectors, E.free, position)


def graded_basis(A: Arrangement, j: int, q: int, max_degree: int | None = None) -> GradedBasis:
    """Basis of the degree-(j, q) piece of the logarithmic forms."""
    if not 0 <= j <= A.nvars:
        raise ValueError(f"form degree {j} outside [0, {A.nvars}]")
    m = numerator_degree(A, j, q)
    if max_degree is not None and m > max_degree:
        raise DegreeLimitExceeded(f"numerator degree {m} exceeds --max-degree {max_degree}")
    return _graded_basis(A, j, q)


def dim_polynomials(nvars: int, degree: int) -> int:
    """dim R_degree for R a polynomial ring in ``nvars`` variables."""
    if degree < 0:
        return 0
    return comb(degree + nvars - 1, nvars - 1)


def hilbert_dims(A: Arrangement, j: int, q_range, max_degree: int | None = None) -> list[tuple[int, int]]:
    return [(q, graded_basis(A, j, q, max_degree).dim) for q in q_range]


def is_logarithmic(A: Arrangement, numerator: PolyForm) -> bool:
    """Direct membership test: d(l_k) ^ A divisible by l_k for all k."""
    for ell in A.hyperplanes:
        w = wedge(ell.differential(), numerator)
        if any(reduce_mod_linear(p, ell) for p in w.coeffs.values()):
            return False
    return True
