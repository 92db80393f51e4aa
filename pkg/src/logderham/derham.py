"""Twisted logarithmic de Rham complex on a single grade.

For eta = A / f and omega = sum_k lam_k dl_k / l_k,

    f * nabla(eta) = dA + sum_k (lam_k - 1) (dl_k ^ A) / l_k,

each quotient exact because A is logarithmic.  Contraction along the Euler
field is O-linear, so it acts on numerators directly.  Both maps preserve
the grade, and on grade q they satisfy

    nabla o iota + iota o nabla = (q + sum(lam)) * id.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .algebra import PolyForm, euler_contract, exact_div_linear, exterior_derivative, wedge
from .arrangement import Arrangement, Lattice, intersection_lattice
from .errors import InvariantError, MismatchedArity
from .linalg import RatMatrix, echelon
from .logforms import GradedBasis, graded_basis
from .weights import ConditionReport, WeightVector, check_conditions


def _weights(A: Arrangement, lam) -> WeightVector:
    lam = lam if isinstance(lam, WeightVector) else WeightVector(lam)
    if len(lam) != A.d:
        raise MismatchedArity(f"{len(lam)} weights for {A.d} hyperplanes")
    return lam


def nabla_numerator(A: Arrangement, lam: WeightVector, numerator: PolyForm) -> PolyForm:
    """Numerator of nabla(numerator / f)."""
    out = exterior_derivative(numerator)
    for ell, w in zip(A.hyperplanes, lam):
        c = w - 1
        if not c:
            continue
        prod = wedge(ell.differential(), numerator)
        quotient = PolyForm(A.nvars, prod.degree,
                            {I: exact_div_linear(p, ell) for I, p in prod.coeffs.items()})
        out = out + quotient.scale(c)
    return out


def _matrix(source: GradedBasis, target: GradedBasis, images: Sequence[PolyForm]) -> RatMatrix:
    cols = [target.coordinates(img) for img in images]
    return RatMatrix.from_columns(cols, target.dim)


@lru_cache(maxsize=256)
def _nabla_matrix(A: Arrangement, lam: WeightVector, j: int, q: int) -> RatMatrix:
    src = graded_basis(A, j, q)
    if j + 1 > A.nvars:
        return RatMatrix.zeros(0, src.dim)
    tgt = graded_basis(A, j + 1, q)
    return _matrix(src, tgt, [nabla_numerator(A, lam, el) for el in src.elements])


@lru_cache(maxsize=256)
def _contraction_matrix(A: Arrangement, j: int, q: int) -> RatMatrix:
    src = graded_basis(A, j, q)
    if j == 0:
        return RatMatrix.zeros(0, src.dim)
    tgt = graded_basis(A, j - 1, q)
    return _matrix(src, tgt, [euler_contract(el) for el in src.elements])


def _guard(A: Arrangement, js, q: int, max_degree: int | None):
    # runs the degree check before anything is built
    for j in js:
        if 0 <= j <= A.nvars:
            graded_basis(A, j, q, max_degree)


def nabla_matrix(A: Arrangement, lam, j: int, q: int, max_degree: int | None = None) -> RatMatrix:
    """Matrix of nabla from the (j, q) piece to the (j + 1, q) piece."""
    lam = _weights(A, lam)
    _guard(A, (j, j + 1), q, max_degree)
    return _nabla_matrix(A, lam, j, q)


def contraction_matrix(A: Arrangement, j: int, q: int, max_degree: int | None = None) -> RatMatrix:
    """Matrix of Euler contraction from the (j, q) piece to the (j - 1, q) piece."""
    _guard(A, (j, j - 1), q, max_degree)
    return _contraction_matrix(A, j, q)


def _rank(M: RatMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return echelon(M.to_rows(), M.cols).rank


@dataclass(frozen=True)
class ComplexReport:
    q: int
    weights: WeightVector
    dims: tuple
    ranks: tuple  # rank of nabla_j : j -> j + 1, for j = 0..n-1
    betti: tuple
    certified: bool | None = None

    @property
    def image_dims(self) -> tuple:
        return self.ranks

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** j * b for j, b in enumerate(self.betti))


def _thread_cap() -> int:
    raw = os.environ.get("LOGDERHAM_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _nabla_job(args):
    A, lam, j, q, max_degree = args
    return nabla_matrix(A, lam, j, q, max_degree)


def nabla_matrices(A: Arrangement, lam, q: int, max_degree: int | None = None,
                   workers: int | None = None) -> list[RatMatrix]:
    lam = _weights(A, lam)
    jobs = [(A, lam, j, q, max_degree) for j in range(A.nvars)]
    workers = _thread_cap() if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            return list(pool.map(_nabla_job, jobs))
    return [_nabla_job(job) for job in jobs]


def subcomplex_cohomology(A: Arrangement, lam, q: int, max_degree: int | None = None,
                          certified: bool | None = None, workers: int | None = None) -> ComplexReport:
    """Dimensions, differential ranks and Betti numbers of the grade-q subcomplex."""
    lam = _weights(A, lam)
    n = A.nvars
    dims = [graded_basis(A, j, q, max_degree).dim for j in range(n + 1)]
    mats = nabla_matrices(A, lam, q, max_degree, workers)
    for j in range(n - 1):
        if not (mats[j + 1] @ mats[j]).is_zero():
            raise InvariantError(f"nabla^2 != 0 at j={j}, q={q}")
    ranks = [_rank(M) for M in mats]
    betti = []
    for j in range(n + 1):
        out_rank = ranks[j] if j < n else 0
        in_rank = ranks[j - 1] if j > 0 else 0
        betti.append(dims[j] - out_rank - in_rank)
    if any(b < 0 for b in betti):
        raise InvariantError(f"negative Betti number {betti}")
    return ComplexReport(q, lam, tuple(dims), tuple(ranks), tuple(betti), certified)


def critical_grade(lam: WeightVector) -> int | None:
    """The grade -sum(lam) when it is an integer, else None."""
    t = lam.total
    return int(-t) if t.denominator == 1 else None


def twisted_betti(A: Arrangement, lam, L: Lattice | None = None, max_degree: int | None = None,
                  workers: int | None = None) -> tuple[tuple, ConditionReport, ComplexReport | None]:
    """Betti numbers of the rank-one local system with weights ``lam``.

    Returns (betti, condition report, complex report).  The complex report is
    None when the total weight is not an integer: there is no grade to
    compute and the cohomology vanishes.
    """
    lam = _weights(A, lam)
    if L is None:
        L, _ = intersection_lattice(A)
    conditions = check_conditions(A, L, lam)
    q = critical_grade(lam)
    if q is None:
        return (0,) * (A.nvars + 1), conditions, None
    report = subcomplex_cohomology(A, lam, q, max_degree, conditions.ok, workers)
    return report.betti, conditions, report


@dataclass(frozen=True)
class LieCheck:
    ok: bool
    scalar: Fraction
    residual: RatMatrix

    def __bool__(self):
        return self.ok


def lie_identity_check(A: Arrangement, lam, j: int, q: int, max_degree: int | None = None) -> LieCheck:
    """Check nabla iota + iota nabla = (q + sum(lam)) id on the (j, q) piece."""
    lam = _weights(A, lam)
    n = A.nvars
    dim = graded_basis(A, j, q, max_degree).dim
    total = RatMatrix.zeros(dim, dim)
    if j >= 1:
        total = total + nabla_matrix(A, lam, j - 1, q, max_degree) @ contraction_matrix(A, j, q, max_degree)
    if j < n:
        total = total + contraction_matrix(A, j + 1, q, max_degree) @ nabla_matrix(A, lam, j, q, max_degree)
    scalar = q + lam.total
    residual = total - RatMatrix.identity(dim, scalar)
    return LieCheck(residual.is_zero(), scalar, residual)
