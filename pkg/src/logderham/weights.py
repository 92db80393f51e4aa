"""Weights on hyperplanes, edge residues and the weight conditions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterable, Sequence

from .algebra import as_fraction
from .arrangement import Arrangement, Flat, Lattice
from .errors import MismatchedArity


@dataclass(frozen=True)
class WeightVector:
    entries: tuple

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", tuple(as_fraction(x) for x in entries))

    @property
    def total(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def shifted(self, z: int) -> "WeightVector":
        return WeightVector(x - z for x in self.entries)

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(a + b for a, b in zip(self.entries, other.entries))

    @classmethod
    def zeros(cls, d: int) -> "WeightVector":
        return cls([0] * d)

    def as_strings(self) -> list[str]:
        return [str(x) for x in self.entries]


def parse_weights(text: str | Sequence) -> WeightVector:
    """Accept ``"1/2,-1/2,3"`` or a list of strings/ints."""
    if isinstance(text, str):
        items = [t for t in text.replace(" ", "").split(",") if t]
    else:
        items = list(text)
    return WeightVector(items)


def _coerce(A: Arrangement, lam) -> WeightVector:
    lam = lam if isinstance(lam, WeightVector) else WeightVector(lam)
    if len(lam) != A.d:
        raise MismatchedArity(f"{len(lam)} weights for {A.d} hyperplanes")
    return lam


def edge_residue(A: Arrangement, L: Lattice, lam, F: Flat) -> Fraction:
    lam = _coerce(A, lam)
    return sum((lam[k] for k in F.hset), Fraction(0))


def threshold(F: Flat) -> int:
    return min(2, F.rank)


def residue_ok(residue: Fraction, bound: int) -> bool:
    """True unless the residue is an integer >= bound."""
    return residue.denominator != 1 or residue < bound


@dataclass(frozen=True)
class FlatCondition:
    flat_id: int
    hset: tuple
    rank: int
    residue: Fraction
    threshold: int
    ok: bool


@dataclass(frozen=True)
class ConditionReport:
    records: tuple
    ok: bool

    def failures(self) -> list[FlatCondition]:
        return [r for r in self.records if not r.ok]


def check_conditions(A: Arrangement, L: Lattice, lam) -> ConditionReport:
    lam = _coerce(A, lam)
    records = []
    for F in L.flats:
        if F.rank < 1:
            continue
        res = sum((lam[k] for k in F.hset), Fraction(0))
        t = threshold(F)
        records.append(FlatCondition(F.id, F.hset, F.rank, res, t, residue_ok(res, t)))
    return ConditionReport(tuple(records), all(r.ok for r in records))


def normalize(A: Arrangement, L: Lattice, lam) -> tuple[WeightVector, int]:
    """Smallest integer shift z >= 0 making ``lam - z`` satisfy the conditions.

    Shifting every weight by the same integer keeps the monodromy, so the
    local system is unchanged.
    """
    lam = _coerce(A, lam)
    # past this bound every residue is negative, hence passes
    worst = max((edge_residue(A, L, lam, F) for F in L.flats if F.rank >= 1), default=Fraction(0))
    limit = max(0, ceil(worst)) + 1
    for z in range(limit + 1):
        shifted = lam.shifted(z)
        if check_conditions(A, L, shifted).ok:
            return shifted, z
    raise AssertionError("no admissible shift found")  # pragma: no cover
