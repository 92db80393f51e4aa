"""JSON arrangement files.

::

    {
      "variables": ["x", "y", "z"],
      "hyperplanes": [["0", "1", "0"], ["1", "-1", "0"], ...],
      "labels": ["y", "x-y", ...],            # optional
      "weights": ["1/2", "-1/2", ...],         # optional
      "factorization": [[1, 2], [3, 4, 5]]     # optional, 1-based or labels
    }

Rationals are strings ("p/q") or integers; floats are rejected.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .arrangement import Arrangement, validate
from .errors import InputError
from .weights import WeightVector, parse_weights


@dataclass(frozen=True)
class ArrangementFile:
    arrangement: Arrangement
    weights: WeightVector | None = None
    factorization: tuple | None = None


def _rational(x) -> Fraction:
    if isinstance(x, float):
        raise InputError(f"float {x!r} in input; write rationals as strings like \"1/3\"")
    try:
        return Fraction(x) if not isinstance(x, str) else Fraction(x.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {x!r}: {exc}") from None


def parse(data: dict[str, Any]) -> ArrangementFile:
    if not isinstance(data, dict):
        raise InputError("arrangement file must hold a JSON object")
    try:
        raw = data["hyperplanes"]
    except KeyError:
        raise InputError("missing 'hyperplanes'") from None
    variables = data.get("variables")
    rows = [[_rational(c) for c in row] for row in raw]
    if variables is not None:
        if any(len(r) != len(variables) for r in rows):
            raise InputError("coefficient vector length differs from the variable count")
    A = validate(rows, data.get("labels"), variables)
    weights = None
    if data.get("weights") is not None:
        try:
            weights = parse_weights([str(_rational(w)) for w in data["weights"]])
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if len(weights) != A.d:
            raise InputError(f"{len(weights)} weights for {A.d} hyperplanes")
    fact = data.get("factorization")
    if fact is not None:
        fact = tuple(tuple(b) for b in fact)
    return ArrangementFile(A, weights, fact)


def load(path: str | Path) -> ArrangementFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None
    return parse(data)


def dump(A: Arrangement, weights: WeightVector | None = None, factorization=None) -> dict:
    out: dict[str, Any] = {
        "variables": list(A.names),
        "hyperplanes": [[str(c) for c in h.coefficients] for h in A.hyperplanes],
    }
    if A.labels:
        out["labels"] = list(A.labels)
    if weights is not None:
        out["weights"] = weights.as_strings()
    if factorization is not None:
        out["factorization"] = [list(b) for b in factorization]
    return out
