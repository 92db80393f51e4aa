"""Exact multivariate polynomials and polynomial differential forms.

Coefficients are :class:`fractions.Fraction`.  Monomials are exponent
tuples, forms are keyed by strictly increasing index tuples (0-based).
Everything here is immutable once built.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .errors import MismatchedArity, NonDivisible

Monomial = Tuple[int, ...]
Index = Tuple[int, ...]


def as_fraction(value) -> Fraction:
    """Coerce ints, strings like ``"-3/4"`` and Fractions to a Fraction.

    Floats are rejected; they would silently lose exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def grlex_key(mono: Monomial):
    """Sort key: higher total degree first, then lexicographically larger."""
    return (-sum(mono), tuple(-e for e in mono))


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent tuples of the given total degree, in graded-lex order."""
    if degree < 0:
        return []
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    rec((), degree, nvars)
    return out


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Sparse polynomial over Q in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise MismatchedArity(f"monomial {mono} in a {nvars}-variable ring")
            c = as_fraction(c)
            if c:
                clean[tuple(mono)] = c
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        c = as_fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        mono = tuple(1 if k == i else 0 for k in range(nvars))
        return cls._raw(nvars, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, mono: Monomial, c=1) -> "Polynomial":
        return cls(len(mono), {tuple(mono): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise MismatchedArity(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = as_fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def derivative(self, i: int) -> "Polynomial":
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Polynomial._raw(self.nvars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        pt = [as_fraction(v) for v in point]
        for m, c in self.terms.items():
            term = c
            for v, e in zip(pt, m):
                if e:
                    term *= v ** e
            total += term
        return total

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        pieces = []
        for m, c in self.items():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self.to_str()})"


def poly_arith(a: Polynomial, b: Polynomial | None, kind: str, c=None) -> Polynomial:
    """Dispatch ``add``, ``mul`` or ``scale`` (with scalar ``c``)."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "scale":
        return a.scale(c)
    raise ValueError(f"unknown operation {kind!r}")


class LinearForm:
    """Homogeneous linear form sum c_i x_i; never identically zero."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable):
        coeffs = tuple(as_fraction(c) for c in coefficients)
        if not any(coeffs):
            raise ValueError("linear form is identically zero")
        self.coefficients = coeffs

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    @property
    def pivot(self) -> int:
        """Largest index carrying a nonzero coefficient."""
        for i in range(len(self.coefficients) - 1, -1, -1):
            if self.coefficients[i]:
                return i
        raise AssertionError("unreachable")

    def as_polynomial(self) -> Polynomial:
        terms = {}
        for i, c in enumerate(self.coefficients):
            if c:
                terms[tuple(1 if k == i else 0 for k in range(self.nvars))] = c
        return Polynomial._raw(self.nvars, terms)

    def differential(self) -> "PolyForm":
        """d of the form, a constant-coefficient 1-form."""
        return PolyForm(self.nvars, 1, {
            (i,): Polynomial.constant(self.nvars, c)
            for i, c in enumerate(self.coefficients) if c
        })

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"LinearForm({self.as_polynomial().to_str()})"


def _split_on(p: Polynomial, v: int) -> Dict[int, Dict[Monomial, Fraction]]:
    # group terms by the exponent of x_v, dropping x_v from the monomial key
    groups: Dict[int, Dict[Monomial, Fraction]] = {}
    for m, c in p.terms.items():
        groups.setdefault(m[v], {})[m[:v] + (0,) + m[v + 1:]] = c
    return groups


def exact_div_linear(p: Polynomial, ell: LinearForm) -> Polynomial:
    """Return q with ``p == ell * q``; raise :class:`NonDivisible` otherwise."""
    if p.nvars != ell.nvars:
        raise MismatchedArity("polynomial and linear form live in different rings")
    n = p.nvars
    v = ell.pivot
    cv = ell.coefficients[v]
    rest = [(i, c) for i, c in enumerate(ell.coefficients) if c and i != v]
    groups = _split_on(p, v)
    if not groups:
        return Polynomial.zero(n)
    top = max(groups)
    quotient: Dict[Monomial, Fraction] = {}
    # synthetic division in x_v with coefficients in the remaining variables
    for e in range(top, 0, -1):
        coeff = groups.pop(e, {})
        if not coeff:
            continue
        q_e = {m: c / cv for m, c in coeff.items()}
        for m, c in q_e.items():
            quotient[m[:v] + (e - 1,) + m[v + 1:]] = c
        lower = groups.setdefault(e - 1, {})
        for m, c in q_e.items():
            for i, ci in rest:
                mm = m[:i] + (m[i] + 1,) + m[i + 1:]
                s = lower.get(mm, 0) - ci * c
                if s:
                    lower[mm] = s
                else:
                    lower.pop(mm, None)
    remainder = {m: c for m, c in groups.get(0, {}).items() if c}
    if remainder:
        raise NonDivisible(Polynomial._raw(n, remainder))
    return Polynomial._raw(n, {m: c for m, c in quotient.items() if c})


class _Substitution:
    """Cached powers of the pivot substitution for one linear form."""

    def __init__(self, ell: LinearForm):
        self.n = ell.nvars
        self.v = ell.pivot
        cv = ell.coefficients[self.v]
        terms = {}
        for i, c in enumerate(ell.coefficients):
            if c and i != self.v:
                terms[tuple(1 if k == i else 0 for k in range(self.n))] = -c / cv
        self.image = Polynomial._raw(self.n, terms)
        self._powers = [Polynomial.constant(self.n, 1)]
        self._mono_cache: Dict[Monomial, Dict[Monomial, Fraction]] = {}

    def power(self, e: int) -> Polynomial:
        while len(self._powers) <= e:
            self._powers.append(self._powers[-1] * self.image)
        return self._powers[e]

    def reduce_monomial(self, mono: Monomial) -> Dict[Monomial, Fraction]:
        hit = self._mono_cache.get(mono)
        if hit is not None:
            return hit
        v = self.v
        e = mono[v]
        base = mono[:v] + (0,) + mono[v + 1:]
        if e == 0:
            out = {base: Fraction(1)}
        else:
            out = {_mono_mul(base, m): c for m, c in self.power(e).terms.items()}
        self._mono_cache[mono] = out
        return out

    def reduce(self, p: Polynomial) -> Polynomial:
        out: Dict[Monomial, Fraction] = {}
        for m, c in p.terms.items():
            for mm, cc in self.reduce_monomial(m).items():
                s = out.get(mm, 0) + c * cc
                if s:
                    out[mm] = s
                else:
                    out.pop(mm, None)
        return Polynomial._raw(self.n, out)


def reduce_mod_linear(p: Polynomial, ell: LinearForm) -> Polynomial:
    """Normal form of ``p`` modulo ``ell``: eliminate the pivot variable.

    The result is zero exactly when ``ell`` divides ``p``.
    """
    if p.nvars != ell.nvars:
        raise MismatchedArity("polynomial and linear form live in different rings")
    return _Substitution(ell).reduce(p)


def merge_sign(a: Index, b: Index) -> int:
    """Sign of dx_a ^ dx_b relative to dx_(a u b) sorted; 0 if they overlap."""
    if set(a) & set(b):
        return 0
    inversions = sum(1 for i in a for j in b if i > j)
    return -1 if inversions & 1 else 1


class PolyForm:
    """A j-form sum a_I dx_I with polynomial coefficients.

    0-forms carry the single key ``()``.
    """

    __slots__ = ("nvars", "degree", "coeffs")

    def __init__(self, nvars: int, degree: int, coeffs: Mapping[Index, Polynomial] | None = None):
        if not 0 <= degree:
            raise ValueError("form degree must be non-negative")
        clean = {}
        for idx, poly in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != degree or list(idx) != sorted(set(idx)):
                raise ValueError(f"bad index {idx} for a {degree}-form")
            if idx and (idx[0] < 0 or idx[-1] >= nvars):
                raise ValueError(f"index {idx} out of range")
            if poly.nvars != nvars:
                raise MismatchedArity("coefficient ring mismatch")
            if poly:
                clean[idx] = poly
        self.nvars = nvars
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def zero(cls, nvars: int, degree: int) -> "PolyForm":
        return cls(nvars, degree, {})

    @classmethod
    def function(cls, p: Polynomial) -> "PolyForm":
        return cls(p.nvars, 0, {(): p})

    @classmethod
    def basic(cls, nvars: int, index: Index, coeff: Polynomial | None = None) -> "PolyForm":
        index = tuple(index)
        coeff = coeff if coeff is not None else Polynomial.constant(nvars, 1)
        return cls(nvars, len(index), {index: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def items(self) -> list[tuple[Index, Polynomial]]:
        return sorted(self.coeffs.items())

    def coefficient(self, index: Index) -> Polynomial:
        return self.coeffs.get(tuple(index), Polynomial.zero(self.nvars))

    def as_polynomial(self) -> Polynomial:
        if self.degree != 0:
            raise ValueError("only 0-forms are functions")
        return self.coefficient(())

    def _check(self, other: "PolyForm"):
        if self.nvars != other.nvars:
            raise MismatchedArity("forms over different rings")

    def __add__(self, other: "PolyForm") -> "PolyForm":
        self._check(other)
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.coeffs)
        for idx, p in other.coeffs.items():
            out[idx] = out[idx] + p if idx in out else p
        return PolyForm(self.nvars, self.degree, out)

    def __neg__(self):
        return PolyForm(self.nvars, self.degree, {i: -p for i, p in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyForm":
        if isinstance(c, Polynomial):
            return PolyForm(self.nvars, self.degree, {i: c * p for i, p in self.coeffs.items()})
        return PolyForm(self.nvars, self.degree, {i: p.scale(c) for i, p in self.coeffs.items()})

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.nvars, self.degree, self.coeffs) == (other.nvars, other.degree, other.coeffs)

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.coeffs.items())))

    def total_degree(self) -> int:
        """Largest polynomial degree among the coefficients (-1 for zero)."""
        return max((p.degree() for p in self.coeffs.values()), default=-1)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.coeffs:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for idx, p in self.items():
            dx = "^".join(f"d{names[i]}" for i in idx)
            parts.append(f"({p.to_str(names)})" + (f" {dx}" if dx else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"PolyForm[{self.degree}]({self.to_str()})"


def exterior_derivative(form: PolyForm) -> PolyForm:
    n = form.nvars
    out: Dict[Index, Polynomial] = {}
    for idx, a in form.coeffs.items():
        for ell in range(n):
            if ell in idx:
                continue
            da = a.derivative(ell)
            if not da:
                continue
            before = sum(1 for i in idx if i < ell)
            key = tuple(sorted(idx + (ell,)))
            term = -da if before & 1 else da
            out[key] = out[key] + term if key in out else term
    return PolyForm(n, form.degree + 1, out)


def wedge(a: PolyForm, b: PolyForm) -> PolyForm:
    """Exterior product; zero beyond the top degree."""
    a._check(b)
    n = a.nvars
    deg = a.degree + b.degree
    if deg > n:
        return PolyForm.zero(n, deg)
    out: Dict[Index, Polynomial] = {}
    for ia, pa in a.coeffs.items():
        for ib, pb in b.coeffs.items():
            s = merge_sign(ia, ib)
            if not s:
                continue
            key = tuple(sorted(ia + ib))
            term = pa * pb
            if s < 0:
                term = -term
            out[key] = out[key] + term if key in out else term
    return PolyForm(n, deg, out)


def euler_contract(form: PolyForm) -> PolyForm:
    """Contraction along the Euler field sum x_i d/dx_i."""
    n = form.nvars
    if form.degree == 0:
        return PolyForm.zero(n, 0)
    out: Dict[Index, Polynomial] = {}
    for idx, a in form.coeffs.items():
        for t, i in enumerate(idx):
            key = idx[:t] + idx[t + 1:]
            term = Polynomial.variable(n, i) * a
            if t & 1:
                term = -term
            out[key] = out[key] + term if key in out else term
    return PolyForm(n, form.degree - 1, out)


def form_index(nvars: int, degree: int) -> list[Index]:
    """Index subsets of the given size in lexicographic order."""
    return list(combinations(range(nvars), degree))


def iter_terms(form: PolyForm) -> Iterator[tuple[Index, Monomial, Fraction]]:
    for idx, p in form.items():
        for m, c in p.items():
            yield idx, m, c
