"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 internal invariant failure (or a
failed ``verify`` run).
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .arrangement import Arrangement, intersection_lattice
from .arrfile import ArrangementFile, load
from .bsideals import candidates, make_factorization, univariate_roots
from .checks import run_suite
from .derham import critical_grade, subcomplex_cohomology
from .errors import InputError, InvariantError, NotEssentialCenter
from .logforms import hilbert_dims
from .weights import WeightVector, check_conditions, normalize, parse_weights


def _q(x: Fraction) -> str:
    return str(x)


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def poincare_string(coeffs: Sequence[int]) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = "t" if k == 1 else f"t^{k}"
            parts.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(parts) or "0"


def parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise InputError(f"range {text!r} is not of the form a..b") from None


def _hset_names(A: Arrangement, hset) -> str:
    return "{" + ", ".join(A.label(k) for k in hset) + "}"


def _weights(args, spec: ArrangementFile, required: bool = True) -> WeightVector | None:
    if args.weights is not None:
        try:
            lam = parse_weights(args.weights)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad --weights: {exc}") from None
    else:
        lam = spec.weights
    if lam is None:
        if required:
            raise InputError("no weights given (use --weights or a 'weights' entry)")
        return None
    if len(lam) != spec.arrangement.d:
        raise InputError(f"{len(lam)} weights for {spec.arrangement.d} hyperplanes")
    return lam


def cmd_lattice(args, spec: ArrangementFile) -> tuple[dict, str]:
    A = spec.arrangement
    L, betti = intersection_lattice(A)
    rows = [(F.id, _hset_names(A, F.hset), F.rank, F.mobius, "yes" if F.dense else "no") for F in L]
    data = {
        "flats": [{"id": F.id, "hyperplanes": [k + 1 for k in F.hset], "rank": F.rank,
                   "mobius": F.mobius, "dense": bool(F.dense)} for F in L],
        "poincare": betti,
        "betti": betti,
        "rank": A.rank,
    }
    text = table(["id", "flat", "rank", "mu", "dense"], rows)
    text += f"\n\nPoincare polynomial: {poincare_string(betti)}"
    text += f"\nOrlik-Solomon Betti: {', '.join(map(str, betti))}\n"
    return data, text


def _conditions_payload(A, report):
    return {
        "ok": report.ok,
        "flats": [{"id": r.flat_id, "hyperplanes": [k + 1 for k in r.hset], "rank": r.rank,
                   "residue": _q(r.residue), "threshold": r.threshold, "ok": r.ok}
                  for r in report.records],
    }


def cmd_betti(args, spec: ArrangementFile) -> tuple[dict, str]:
    A = spec.arrangement
    L, _ = intersection_lattice(A)
    lam = _weights(args, spec)
    shift = 0
    if args.normalize:
        lam, shift = normalize(A, L, lam)
    conditions = check_conditions(A, L, lam)
    q = args.grade if args.grade is not None else critical_grade(lam)
    data: dict[str, Any] = {
        "weights": lam.as_strings(),
        "total": _q(lam.total),
        "shift": shift,
        "conditions": _conditions_payload(A, conditions),
    }
    lines = [f"weights: {', '.join(lam.as_strings())}   (sum {lam.total})"]
    if args.normalize:
        lines.append(f"normalization shift z = {shift}")
    fails = conditions.failures()
    lines.append("weight conditions: " + ("all pass" if conditions.ok else f"{len(fails)} edge(s) fail"))
    if fails:
        lines.append(table(["flat", "rank", "residue", "bound"],
                           [(_hset_names(A, r.hset), r.rank, r.residue, r.threshold) for r in fails]))
    if q is None:
        n = A.nvars
        data.update({"grade": None, "dims": None, "image_dims": None, "betti": [0] * (n + 1),
                     "certified": conditions.ok})
        lines.append("sum of weights is not an integer: the complex is acyclic")
        lines.append("Betti: " + ", ".join(["0"] * (n + 1)))
        return data, "\n".join(lines) + "\n"
    critical = args.grade is None or Fraction(args.grade) == -lam.total
    report = subcomplex_cohomology(A, lam, q, args.max_degree, conditions.ok and critical)
    data.update({
        "grade": q,
        "critical": critical,
        "dims": list(report.dims),
        "image_dims": list(report.ranks),
        "betti": list(report.betti),
        "certified": bool(report.certified),
    })
    lines.append(f"grade q = {q}" + ("" if critical else "  (not the critical grade)"))
    rows = []
    for j in range(A.nvars + 1):
        img = report.ranks[j] if j < A.nvars else "-"
        rows.append((j, report.dims[j], img, report.betti[j]))
    lines.append(table(["j", "dim", "rank d_j", "betti"], rows))
    lines.append(f"image dims: {', '.join(map(str, report.ranks))}")
    lines.append(f"Betti: {', '.join(map(str, report.betti))}")
    lines.append("certified: " + ("yes" if report.certified else "no (identification with the local system not guaranteed)"))
    return data, "\n".join(lines) + "\n"


def cmd_hilbert(args, spec: ArrangementFile) -> tuple[dict, str]:
    A = spec.arrangement
    if not 0 <= args.j <= A.nvars:
        raise InputError(f"-j must lie in 0..{A.nvars}")
    dims = hilbert_dims(A, args.j, parse_range(args.q_range), args.max_degree)
    data = {"j": args.j, "dims": [{"q": q, "dim": d} for q, d in dims]}
    return data, table(["q", f"dim Omega^{args.j}(log)_q"], dims) + "\n"


def cmd_bs(args, spec: ArrangementFile) -> tuple[dict, str]:
    A = spec.arrangement
    L, _ = intersection_lattice(A)
    blocks = spec.factorization
    if args.factorization is not None:
        try:
            blocks = json.loads(args.factorization)
        except json.JSONDecodeError:
            raise InputError("--factorization must be JSON, e.g. [[1,2],[3]]") from None
    F = make_factorization(A, blocks)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", NotEssentialCenter)
        comps = candidates(A, L, F)
        roots, verdict = univariate_roots(A, L)
    notes = sorted({str(w.message) for w in caught if issubclass(w.category, NotEssentialCenter)})
    lo = Fraction(-2) + Fraction(1, A.d)
    data = {
        "factorization": [[k + 1 for k in b] for b in F.blocks],
        "candidates": [{"flat": c.flat_id, "hyperplanes": [k + 1 for k in c.hset], "rank": c.rank,
                        "coefficients": {str(k + 1): v for k, v in c.coeffs}, "constant": c.constant,
                        "v": c.v, "Q": c.q_bound, "case": c.case} for c in comps],
        "univariate_roots": [_q(r) for r in roots],
        "interval": [_q(lo), "0"],
        "interval_ok": verdict,
        "warnings": notes,
    }
    rows = [(_hset_names(A, c.hset), c.rank, c.v, c.q_bound, c.case, c.to_str() + " = 0") for c in comps]
    text = table(["edge", "rank", "v", "Q", "case", "component"], rows)
    text += "\n\nunivariate roots: " + ", ".join(map(str, roots))
    if verdict is None:
        text += "\n(single hyperplane: no interval claim)"
    else:
        text += f"\ninside ({lo}, 0): {'yes' if verdict else 'NO'}"
    for note in notes:
        text += f"\nwarning: {note}"
    return data, text + "\n"


def cmd_verify(args, spec: ArrangementFile) -> tuple[dict, str]:
    A = spec.arrangement
    lam = _weights(args, spec, required=False) or WeightVector.zeros(A.d)
    grades = parse_range(args.q_range)
    results = run_suite(A, lam, grades, seed=args.seed, max_degree=args.max_degree)
    data = {"weights": lam.as_strings(), "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail}
                                                    for r in results],
            "ok": all(r.ok for r in results)}
    text = "\n".join(f"[{'PASS' if r.ok else 'FAIL'}] {r.name}" + (f"  ({r.detail})" if r.detail else "")
                     for r in results)
    return data, text + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-degree", type=int, default=None,
                        help="abort if a numerator degree exceeds this bound")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    p = argparse.ArgumentParser(prog="logderham", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lattice", parents=[common], help="intersection lattice and OS Betti numbers")
    s.add_argument("file")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("betti", parents=[common], help="twisted Betti numbers")
    s.add_argument("file")
    s.add_argument("--weights", help="comma-separated rationals, e.g. 1/2,-1/2,0")
    s.add_argument("--grade", type=int, default=None, help="compute at this grade instead of -sum(weights)")
    s.add_argument("--normalize", action="store_true", help="apply the integer weight shift first")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("hilbert", parents=[common], help="dimensions of graded log forms")
    s.add_argument("file")
    s.add_argument("-j", type=int, required=True)
    s.add_argument("--q-range", default="0..4", help="a..b (use --q-range=-2..3 for negatives)")
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("bs-candidates", parents=[common], help="Bernstein-Sato candidate components")
    s.add_argument("file")
    s.add_argument("--factorization", help="JSON block list, e.g. [[1,2],[3]]")
    s.set_defaults(func=cmd_bs)

    s = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    s.add_argument("file")
    s.add_argument("--weights")
    s.add_argument("--q-range", default="-2..2")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = load(args.file)
        data, text = args.func(args, spec)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(dumps(data) if args.json else text)
    if args.command == "verify" and not data["ok"]:
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
