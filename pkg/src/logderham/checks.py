"""Invariant suite behind ``logderham verify``.

Every check returns a :class:`CheckResult`; nothing raises on a failed
identity, only on malformed input.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import PolyForm, Polynomial, euler_contract, exterior_derivative, form_index, monomials_of_degree
from .arrangement import Arrangement, intersection_lattice
from .derham import contraction_matrix, lie_identity_check, nabla_matrix, subcomplex_cohomology, twisted_betti
from .logforms import graded_basis
from .weights import WeightVector


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def random_polynomial(rng: random.Random, nvars: int, max_degree: int = 3, terms: int = 4) -> Polynomial:
    t = {}
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        monos = monomials_of_degree(nvars, deg)
        t[rng.choice(monos)] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return Polynomial(nvars, t)


def random_form(rng: random.Random, nvars: int, degree: int, max_degree: int = 3) -> PolyForm:
    coeffs = {}
    for I in form_index(nvars, degree):
        if rng.random() < 0.7:
            coeffs[I] = random_polynomial(rng, nvars, max_degree)
    return PolyForm(nvars, degree, coeffs)


def check_d_squared(nvars: int, rng: random.Random, trials: int = 20) -> CheckResult:
    for _ in range(trials):
        j = rng.randint(0, nvars)
        A = random_form(rng, nvars, j)
        if exterior_derivative(exterior_derivative(A)):
            return CheckResult("d^2 = 0 on random forms", False, f"counterexample {A!r}")
    return CheckResult("d^2 = 0 on random forms", True, f"{trials} forms")


def check_iota_squared(nvars: int, rng: random.Random, trials: int = 20) -> CheckResult:
    for _ in range(trials):
        j = rng.randint(0, nvars)
        A = random_form(rng, nvars, j)
        if euler_contract(euler_contract(A)):
            return CheckResult("iota^2 = 0 on random forms", False, f"counterexample {A!r}")
    return CheckResult("iota^2 = 0 on random forms", True, f"{trials} forms")


def check_matrix_identities(A: Arrangement, lam: WeightVector, grades: Iterable[int],
                            max_degree: int | None = None) -> list[CheckResult]:
    n = A.nvars
    bad_nabla, bad_iota, bad_lie = [], [], []
    grades = list(grades)
    for q in grades:
        nab = [nabla_matrix(A, lam, j, q, max_degree) for j in range(n)]
        for j in range(n - 1):
            if not (nab[j + 1] @ nab[j]).is_zero():
                bad_nabla.append((j, q))
        con = [contraction_matrix(A, j, q, max_degree) for j in range(1, n + 1)]
        for j in range(len(con) - 1):
            if not (con[j] @ con[j + 1]).is_zero():
                bad_iota.append((j + 2, q))
        for j in range(n + 1):
            if not lie_identity_check(A, lam, j, q, max_degree).ok:
                bad_lie.append((j, q))
    span = f"grades {grades[0]}..{grades[-1]}" if grades else "no grades"
    return [
        CheckResult("nabla^2 = 0 (matrices)", not bad_nabla, str(bad_nabla) if bad_nabla else span),
        CheckResult("iota^2 = 0 (matrices)", not bad_iota, str(bad_iota) if bad_iota else span),
        CheckResult("nabla iota + iota nabla = (q + sum lam) id", not bad_lie,
                    str(bad_lie) if bad_lie else span),
    ]


def check_off_critical(A: Arrangement, lam: WeightVector, grades: Iterable[int],
                       max_degree: int | None = None) -> CheckResult:
    crit = -lam.total
    bad = []
    used = []
    for q in grades:
        if q == crit:
            continue
        used.append(q)
        rep = subcomplex_cohomology(A, lam, q, max_degree)
        if any(rep.betti):
            bad.append((q, rep.betti))
    return CheckResult("acyclic off the critical grade", not bad,
                       str(bad) if bad else f"grades {used}")


def check_os_oracle(A: Arrangement, max_degree: int | None = None) -> CheckResult:
    _, os_betti = intersection_lattice(A)
    betti, _, _ = twisted_betti(A, WeightVector.zeros(A.d), max_degree=max_degree)
    return CheckResult("lambda = 0 agrees with Orlik-Solomon", list(betti) == list(os_betti),
                       f"complex {list(betti)} vs OS {list(os_betti)}")


def check_euler_sums(A: Arrangement, grades: Iterable[int], max_degree: int | None = None) -> CheckResult:
    bad = []
    for q in grades:
        s = sum((-1) ** j * graded_basis(A, j, q, max_degree).dim for j in range(A.nvars + 1))
        if s:
            bad.append((q, s))
    return CheckResult("alternating sum of dimensions vanishes", not bad, str(bad) if bad else "")


def run_suite(A: Arrangement, lam: WeightVector, grades: Iterable[int], seed: int = 0,
              max_degree: int | None = None) -> list[CheckResult]:
    rng = random.Random(seed)
    grades = list(grades)
    results = [check_d_squared(A.nvars, rng), check_iota_squared(A.nvars, rng)]
    results += check_matrix_identities(A, lam, grades, max_degree)
    results.append(check_off_critical(A, lam, grades, max_degree))
    results.append(check_os_oracle(A, max_degree))
    results.append(check_euler_sums(A, grades, max_degree))
    return results
