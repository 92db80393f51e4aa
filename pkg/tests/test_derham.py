from fractions import Fraction

import pytest

from logderham import catalog
from logderham.algebra import PolyForm, Polynomial, exterior_derivative, wedge
from logderham.arrangement import intersection_lattice
from logderham.derham import (
    contraction_matrix,
    lie_identity_check,
    nabla_matrix,
    nabla_numerator,
    subcomplex_cohomology,
    twisted_betti,
)
from logderham.linalg import RatMatrix, rank, solve
from logderham.logforms import graded_basis
from logderham.weights import WeightVector, check_conditions, parse_weights

B3_LAM = parse_weights(list(catalog.DELETED_B3_WEIGHTS))


def test_single_hyperplane_nabla():
    A = catalog.single()
    M = nabla_matrix(A, ["1/2"], 0, 0)
    assert M.to_rows() == [[Fraction(1, 2)]]


def test_zero_weights_give_exterior_derivative():
    A = catalog.three_lines()
    f = A.defining_polynomial()
    for j in range(2):
        for q in (0, 1):
            M = nabla_matrix(A, [0, 0, 0], j, q)
            src, tgt = graded_basis(A, j, q), graded_basis(A, j + 1, q)
            # d(A/f) = (dA - df/f ^ A)/f; compare numerators scaled by f
            for col, el in enumerate(src.elements):
                image = tgt.from_coordinates(M.column(col))
                df = exterior_derivative(PolyForm.function(f))
                lhs = exterior_derivative(el).scale(f) - wedge(df, el)
                assert image.scale(f) == lhs


def test_contraction_examples():
    A = catalog.single()
    assert contraction_matrix(A, 1, 0).to_rows() == [[1]]
    A = catalog.boolean(2)
    M = contraction_matrix(A, 2, 0)
    tgt = graded_basis(A, 1, 0)
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    # (1/xy) dx^dy -> dy/y - dx/x, numerator x dy - y dx
    assert tgt.from_coordinates(M.column(0)) == PolyForm(2, 1, {(1,): x, (0,): -y})


def test_coordinates_agree_with_general_solve():
    A = catalog.braid()
    lam = ["1/3", "1/3", "1/3"]
    src, tgt = graded_basis(A, 1, -1), graded_basis(A, 2, -1)
    M = nabla_matrix(A, lam, 1, -1)
    V = RatMatrix.from_columns(tgt.vectors, len(tgt.index))
    for col, el in enumerate(src.elements):
        b = tgt.vectorize(nabla_numerator(A, WeightVector(lam), el))
        assert solve(V, b) == M.column(col)


def test_subcomplex_examples():
    A = catalog.boolean(2)
    assert subcomplex_cohomology(A, [0, 0], 0).betti == (1, 2, 1)
    # sum 5/2 is never an integer grade
    for q in range(-3, 4):
        assert not any(subcomplex_cohomology(A, ["3/2", 1], q).betti)


def test_twisted_betti_examples():
    A = catalog.single()
    assert twisted_betti(A, [0])[0] == (1, 1)
    betti, cond, report = twisted_betti(A, ["1/2"])
    assert betti == (0, 0) and report is None and cond.ok


def test_deleted_b3_pencil_ordering_reproduces_reference():
    A = catalog.deleted_b3_pencil_first()
    betti, cond, report = twisted_betti(A, B3_LAM)
    assert cond.ok and report.certified
    assert report.q == -1
    assert report.ranks[1:] == (8, 8)
    assert betti == (0, 1, 8, 7)
    assert rank(nabla_matrix(A, B3_LAM, 1, -1)) == 8


def test_deleted_b3_listed_ordering():
    # weights in the order the factors of f are listed; values cross-checked by
    # representative independence below
    A = catalog.deleted_b3()
    betti, cond, report = twisted_betti(A, B3_LAM)
    assert cond.ok
    assert report.dims == (0, 9, 24, 15)
    assert report.ranks == (0, 9, 9)
    assert betti == (0, 0, 6, 6)


@pytest.mark.parametrize("arr", [catalog.deleted_b3, catalog.deleted_b3_pencil_first])
def test_representative_independence(arr):
    """Integer shifts of single weights give the same local system."""
    A = arr()
    L, _ = intersection_lattice(A)
    base = twisted_betti(A, B3_LAM, L)[0]
    shifts = [(1, 0, 0, 0, 0, 0, -1, 0), (0, 0, 1, 0, 0, -1, 0, 0), (-1, 0, 0, 0, 0, 0, 0, 0),
              (0, -1, 0, 0, 1, 0, 0, -1), (0, 0, 0, 0, -1, 0, 0, 0)]
    tried = 0
    for k in shifts:
        lam = WeightVector(a + b for a, b in zip(B3_LAM, k))
        if not check_conditions(A, L, lam).ok:
            continue
        tried += 1
        assert twisted_betti(A, lam, L)[0] == base
    assert tried >= 3


def test_lie_identity_examples():
    A = catalog.single()
    assert lie_identity_check(A, ["1/2"], 0, 0)
    for name, make in catalog.SUITE.items():
        A = make()
        for j in range(A.nvars + 1):
            assert lie_identity_check(A, [0] * A.d, j, 0), name
    A = catalog.deleted_b3()
    check = lie_identity_check(A, B3_LAM, 1, -1)
    assert check.ok and check.scalar == 0


def test_lie_identity_reports_residual():
    A = catalog.boolean(2)
    check = lie_identity_check(A, [0, 0], 1, 1)
    assert check.ok and check.residual.is_zero()


@pytest.mark.parametrize("lam", [None, "third"])
def test_identities_across_suite(suite_arrangement, lam):
    _, A = suite_arrangement
    lam = [0] * A.d if lam is None else ["1/3"] * A.d
    n = A.nvars
    for q in (-2, -1, 0, 1):
        nab = [nabla_matrix(A, lam, j, q) for j in range(n)]
        for j in range(n - 1):
            assert (nab[j + 1] @ nab[j]).is_zero()
        iot = [contraction_matrix(A, j, q) for j in range(1, n + 1)]
        for j in range(n - 1):
            assert (iot[j] @ iot[j + 1]).is_zero()
        for j in range(n + 1):
            assert lie_identity_check(A, lam, j, q).ok


def test_untwisted_equals_orlik_solomon(suite_arrangement):
    _, A = suite_arrangement
    _, os_betti = intersection_lattice(A)
    assert list(twisted_betti(A, [0] * A.d)[0]) == os_betti


def test_off_critical_acyclic(suite_arrangement):
    _, A = suite_arrangement
    lam = WeightVector(Fraction(k + 1, 5) for k in range(A.d))
    for q in range(-2, 3):
        if q != -lam.total:
            assert not any(subcomplex_cohomology(A, lam, q).betti)


def test_uncertified_results_are_flagged():
    A = catalog.three_lines()
    betti, cond, report = twisted_betti(A, ["2/3", "2/3", "2/3"])
    assert not cond.ok and report.certified is False
    # same local system as -1/3 weights, which pass the conditions
    good = twisted_betti(A, ["-1/3", "-1/3", "-1/3"])
    assert good[1].ok and good[0] == (0, 1, 1)


def test_euler_characteristic_of_report(suite_arrangement):
    _, A = suite_arrangement
    rep = subcomplex_cohomology(A, [0] * A.d, 0)
    assert rep.euler_characteristic == sum((-1) ** j * d for j, d in enumerate(rep.dims)) == 0


def test_process_pool_matches_serial():
    A = catalog.braid()
    serial = subcomplex_cohomology(A, ["1/3"] * 3, -1, workers=1)
    pooled = subcomplex_cohomology(A, ["1/3"] * 3, -1, workers=2)
    assert serial == pooled
