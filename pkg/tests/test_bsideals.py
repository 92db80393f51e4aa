import warnings
from fractions import Fraction

import pytest

from logderham import catalog
from logderham.arrangement import intersection_lattice, validate
from logderham.bsideals import candidates, linear_factorization, make_factorization, univariate_roots
from logderham.errors import InputError, NotEssentialCenter


def comps(A, F=None):
    L, _ = intersection_lattice(A)
    return candidates(A, L, F)


def as_set(cs):
    return {(c.coeffs, c.constant) for c in cs}


def test_boolean_linear_factorization():
    A = catalog.boolean(2)
    out = comps(A, linear_factorization(A))
    # s1 + 1 and s2 + 1
    assert as_set(out) == {(((0, 1),), 1), (((1, 1),), 1)}


def test_boolean_trivial_factorization():
    A = catalog.boolean(2)
    assert as_set(comps(A)) == {(((0, 2 // 2),), 1)}


def test_three_lines():
    A = catalog.three_lines()
    L, _ = intersection_lattice(A)
    roots, ok = univariate_roots(A, L)
    assert roots == [Fraction(-2, 3), Fraction(-1), Fraction(-4, 3)]
    assert ok is True
    centre = [c for c in comps(A) if c.rank == 2]
    assert [c.q_bound for c in centre] == [2, 2, 2] and centre[0].case == "center"


def test_single_and_boolean_roots():
    A = catalog.single()
    L, _ = intersection_lattice(A)
    assert univariate_roots(A, L) == ([Fraction(-1)], None)
    A = catalog.boolean(3)
    L, _ = intersection_lattice(A)
    assert univariate_roots(A, L) == ([Fraction(-1)], True)


def test_deleted_b3_roots_in_interval():
    A = catalog.deleted_b3()
    L, _ = intersection_lattice(A)
    roots, ok = univariate_roots(A, L)
    assert ok is True
    assert min(roots) == Fraction(-14, 8)
    assert all(Fraction(-15, 8) < r < 0 for r in roots)


@pytest.mark.filterwarnings("ignore::logderham.errors.NotEssentialCenter")
def test_invariants(suite_arrangement):
    _, A = suite_arrangement
    L, _ = intersection_lattice(A)
    for F in (make_factorization(A), linear_factorization(A)):
        for c in candidates(A, L, F):
            assert c.d_E == len(c.hset)
            assert c.q_bound >= 0 and c.rank <= c.constant <= c.rank + c.q_bound


@pytest.mark.filterwarnings("ignore::logderham.errors.NotEssentialCenter")
def test_specialization_matches_univariate(suite_arrangement):
    _, A = suite_arrangement
    L, _ = intersection_lattice(A)
    uni = {(c.flat_id, c.v): (c.d_E, c.constant) for c in candidates(A, L, make_factorization(A))}
    for c in candidates(A, L, linear_factorization(A)):
        # linear and trivial bounds can differ away from the centre; compare shared (E, v)
        if (c.flat_id, c.v) in uni:
            assert uni[(c.flat_id, c.v)] == (sum(k for _, k in c.coeffs), c.constant)


def test_mixed_factorization():
    A = catalog.three_lines()
    F = make_factorization(A, [[1, 2], [3]])
    out = comps(A, F)
    centre = {c.constant for c in out if c.rank == 2}
    assert centre == {2, 3, 4}
    assert {c.coeffs for c in out if c.rank == 2} == {((0, 2), (1, 1))}


def test_labels_in_factorization():
    A = catalog.three_lines()
    F = make_factorization(A, [["x", "y"], ["x+y"]])
    assert F.blocks == ((0, 1), (2,))


@pytest.mark.parametrize("blocks", [[[1, 2]], [[1, 2], [2, 3]], [[1, 2, 3], []], [[1, 2, 4]]])
def test_bad_factorizations(blocks):
    with pytest.raises(InputError):
        make_factorization(catalog.three_lines(), blocks)


def test_non_essential_centre_warns():
    A = validate([[1, 0, 0], [0, 1, 0], [1, 1, 0]])
    L, _ = intersection_lattice(A)
    with pytest.warns(NotEssentialCenter):
        out = candidates(A, L, make_factorization(A))
    centre = [c for c in out if c.rank == 2]
    assert centre[0].case == "general" and centre[0].q_bound == 3
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        candidates(A, L, linear_factorization(A))
