import random
from itertools import combinations

import pytest

from logderham import catalog
from logderham.arrangement import (
    dense_flags,
    flats,
    intersection_lattice,
    is_connected,
    mobius_poincare,
    validate,
)
from logderham.errors import EmptyArrangement, NotReduced, ZeroForm
from logderham.linalg import rank


def brute_force_flats(A):
    """Every subset, closed by brute force, deduplicated."""
    out = set()
    for size in range(A.d + 1):
        for S in combinations(range(A.d), size):
            r = rank(A.normals(S)) if S else 0
            out.add(tuple(k for k in range(A.d) if rank(A.normals(S + (k,))) == r))
    return out


def bipartition_connected(vectors):
    """Connected iff no split S | S^c with rank(S) + rank(S^c) = rank(all)."""
    m = len(vectors)
    total = rank(vectors)
    for size in range(1, m // 2 + 1):
        for S in combinations(range(m), size):
            Sc = [i for i in range(m) if i not in S]
            if rank([vectors[i] for i in S]) + rank([vectors[i] for i in Sc]) == total:
                return False
    return True


def test_validate_canonicalizes():
    A = validate([[2, 2]])
    assert A.hyperplanes[0].coefficients == (1, 1)
    A = validate([["-1/2", "1/3"]])
    assert A.hyperplanes[0].coefficients == (3, -2)


@pytest.mark.parametrize("raw,err", [([[1, 0], [3, 0]], NotReduced), ([[0, 0]], ZeroForm),
                                     ([], EmptyArrangement), ([[1, 1], [-2, -2]], NotReduced)])
def test_validate_rejects(raw, err):
    with pytest.raises(err):
        validate(raw)


def test_deleted_b3_is_valid():
    A = catalog.deleted_b3()
    assert A.d == 8 and A.rank == 3 and A.is_essential


def test_boolean_flats():
    L = flats(catalog.boolean(2))
    assert [(F.hset, F.rank) for F in L] == [((), 0), ((0,), 1), ((1,), 1), ((0, 1), 2)]


def test_three_lines_flats():
    L = flats(catalog.three_lines())
    assert sorted(F.hset for F in L) == sorted(brute_force_flats(catalog.three_lines()))
    assert len(L) == 5
    assert L.top.hset == (0, 1, 2) and L.top.rank == 2


def test_deleted_b3_rank_two_pencil():
    A = catalog.deleted_b3()
    F = flats(A).by_hset([0, 1, 6, 7])
    assert F.rank == 2


def test_flats_match_brute_force(suite_arrangement):
    _, A = suite_arrangement
    assert {F.hset for F in flats(A)} == brute_force_flats(A)


def test_join_closed(suite_arrangement):
    _, A = suite_arrangement
    from logderham.arrangement import closure
    L = flats(A)
    hsets = {F.hset for F in L}
    for F in L:
        for G in L:
            assert closure(A, F.hset + G.hset) in hsets


def test_mobius_examples():
    L, poincare, betti = mobius_poincare(flats(catalog.boolean(2)))
    assert [F.mobius for F in L] == [1, -1, -1, 1]
    assert betti == [1, 2, 1]
    L, _, betti = mobius_poincare(flats(catalog.three_lines()))
    assert L.top.mobius == 2 and betti == [1, 3, 2]
    assert mobius_poincare(flats(catalog.single()))[2] == [1, 1]


def test_known_poincare_polynomials():
    # braid arrangement A_2 (non-essential in 3 variables): (1+t)(1+2t)
    assert intersection_lattice(catalog.braid())[1] == [1, 3, 2, 0]
    # deleted B3 is free with exponents 1, 3, 4
    assert intersection_lattice(catalog.deleted_b3())[1] == [1, 8, 19, 12]


def test_poincare_vanishes_at_minus_one(suite_arrangement):
    _, A = suite_arrangement
    L, betti = intersection_lattice(A)
    assert sum((-1) ** k * b for k, b in enumerate(betti)) == 0
    assert all(b == 0 for b in betti[A.rank + 1:])
    for F in L:
        if F.rank:
            assert sum(G.mobius for G in L.below(F)) + F.mobius == 0


def test_dense_examples():
    L = dense_flags(catalog.boolean(2), flats(catalog.boolean(2)))
    assert [F.dense for F in L] == [False, True, True, False]
    L = dense_flags(catalog.three_lines(), flats(catalog.three_lines()))
    assert L.top.dense
    assert bipartition_connected(catalog.three_lines().normals())


def test_dense_against_bipartition(suite_arrangement):
    _, A = suite_arrangement
    L, _ = intersection_lattice(A)
    for F in L:
        if F.rank >= 1:
            assert F.dense == bipartition_connected(A.normals(F.hset)), F


def test_connectivity_random_subarrangements():
    rng = random.Random(5)
    for _ in range(60):
        m = rng.randint(1, 8)
        n = rng.randint(1, 4)
        vecs = []
        while len(vecs) < m:
            v = [rng.randint(-1, 1) for _ in range(n)]
            if any(v):
                vecs.append(v)
        assert is_connected(vecs) == bipartition_connected(vecs)


def test_connectivity_twelve_hyperplanes():
    # the B3 arrangement plus the diagonal planes x+-y+-z minus one: 12 planes
    vecs = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, -1, 0], [1, 0, 1], [1, 0, -1],
            [0, 1, 1], [0, 1, -1], [1, 1, 1], [1, -1, 1], [1, 1, -1]]
    assert is_connected(vecs) == bipartition_connected(vecs)
    split = [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 1, 1]]
    assert not is_connected(split) and not bipartition_connected(split)


def test_permutation_invariance_of_betti():
    A = catalog.deleted_b3()
    rng = random.Random(2)
    order = list(range(A.d))
    rng.shuffle(order)
    assert intersection_lattice(A.permuted(order))[1] == intersection_lattice(A)[1]
