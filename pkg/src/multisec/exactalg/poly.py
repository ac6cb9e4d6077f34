"""Sparse multivariate polynomials with exact coefficients.

A polynomial is a map from exponent tuples (one entry per variable) to
nonzero scalars.  Coefficients are Fraction or Cyclotomic, uniform within a
polynomial in practice; mixed arithmetic coerces through the scalar types.

Canonical text form: terms in descending graded-lexicographic order joined
by " + "/" - ", coefficient as "p" or "p/q", monomial factors "var^e"
joined by "*" (exponent 1 written bare).  Examples::

    S0^3*S1^2        2*T0^5 - 1/3*T0*T1^4        0

The parser accepts exactly this family of strings with rational
coefficients; it is used for the plain-text fixture files and accepted in
tests.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalars import Cyclotomic, scalar_is_zero

Exponent = tuple[int, ...]


def _grlex_key(exps: Exponent):
    # descending graded-lex when used as an ascending sort key
    return (-sum(exps), tuple(-e for e in exps))


class SparseMultiPoly:
    """Immutable sparse polynomial over an ordered variable tuple."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str],
                 terms: Mapping[Exponent, object] | Iterable[tuple[Exponent, object]] = ()):
        variables = tuple(variables)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, object] = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError(
                    f"exponent {exps} does not match variables {variables}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if isinstance(coeff, int):
                coeff = Fraction(coeff)
            if exps in clean:
                coeff = clean[exps] + coeff
            if scalar_is_zero(coeff):
                clean.pop(exps, None)
            else:
                clean[exps] = coeff
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparseMultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "SparseMultiPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "SparseMultiPoly":
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "SparseMultiPoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Exponent, coeff=1) -> "SparseMultiPoly":
        return cls(variables, {tuple(exps): coeff})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int | None:
        """Maximum term degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self) -> list[tuple[Exponent, object]]:
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def _check_same_variables(self, other: "SparseMultiPoly") -> None:
        if self.variables != other.variables:
            raise ValueError(
                f"variable mismatch: {self.variables} vs {other.variables}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, SparseMultiPoly):
            self._check_same_variables(other)
            merged = dict(self.terms)
            for exps, c in other.terms.items():
                merged[exps] = merged.get(exps, 0) + c
            return SparseMultiPoly(self.variables, merged)
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self + SparseMultiPoly.constant(self.variables, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return SparseMultiPoly(self.variables,
                               {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (SparseMultiPoly, int, Fraction, Cyclotomic)):
            return self + (-other if isinstance(other, SparseMultiPoly)
                           else SparseMultiPoly.constant(self.variables, other) * -1)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SparseMultiPoly):
            self._check_same_variables(other)
            out: dict[Exponent, object] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    prod = c1 * c2
                    if e in out:
                        prod = out[e] + prod
                    if scalar_is_zero(prod):
                        out.pop(e, None)
                    else:
                        out[e] = prod
            return SparseMultiPoly(self.variables, out)
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return SparseMultiPoly(self.variables,
                                   {e: c * other for e, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, SparseMultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    # -- substitution and evaluation ---------------------------------------

    def evaluate(self, values: Sequence) -> object:
        """Evaluate at a point given as one scalar per variable."""
        if len(values) != len(self.variables):
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            acc = coeff
            for v, e in zip(values, exps):
                if e:
                    acc = acc * v ** e
            total = acc + total
        return total

    def scale_variable(self, index: int, scalar) -> "SparseMultiPoly":
        """Substitute x_index -> scalar * x_index."""
        return SparseMultiPoly(
            self.variables,
            {e: c * scalar ** e[index] for e, c in self.terms.items()})

    def divide_exponents(self, divisor: int, new_variables: Sequence[str]) -> "SparseMultiPoly":
        """Substitute each x_i^divisor -> y_i; every exponent must divide."""
        out = {}
        for exps, c in self.terms.items():
            if any(e % divisor for e in exps):
                raise ValueError(
                    f"exponent vector {exps} not divisible by {divisor}")
            out[tuple(e // divisor for e in exps)] = c
        return SparseMultiPoly(new_variables, out)

    def apply_variable_permutation(self, perm: Sequence[int]) -> "SparseMultiPoly":
        """Return p(x_perm[0], ..., x_perm[n-1]) over the same variables."""
        return SparseMultiPoly(
            self.variables,
            {tuple(e[perm[i]] for i in range(len(e))): c
             for e, c in self.terms.items()})

    def map_coefficients(self, fn) -> "SparseMultiPoly":
        return SparseMultiPoly(self.variables,
                               {e: fn(c) for e, c in self.terms.items()})

    # -- canonical text form -------------------------------------------------

    def canonical_str(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps) if e)
            if isinstance(coeff, Cyclotomic):
                body = f"({coeff})" + (f"*{mono}" if mono else "")
                sign = "+"
            else:
                sign = "-" if coeff < 0 else "+"
                c = abs(coeff)
                cstr = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
                if not mono:
                    body = cstr
                elif c == 1:
                    body = mono
                else:
                    body = f"{cstr}*{mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    __str__ = canonical_str

    def __repr__(self) -> str:
        return f"SparseMultiPoly({self.variables!r}, '{self.canonical_str()}')"


_TERM_FACTOR = re.compile(r"^([A-Za-z][A-Za-z0-9+\-]*?)(?:\^(\d+))?$")


def parse_poly(text: str, variables: Sequence[str]) -> SparseMultiPoly:
    """Parse the canonical text form (rational coefficients only)."""
    variables = tuple(variables)
    text = text.strip()
    if text == "0":
        return SparseMultiPoly.zero(variables)
    # normalize to '+'-separated signed terms
    pieces = text.replace(" - ", " + -").split(" + ")
    var_index = {v: i for i, v in enumerate(variables)}
    terms: list[tuple[Exponent, Fraction]] = []
    for piece in pieces:
        piece = piece.strip()
        sign = Fraction(1)
        if piece.startswith("-"):
            sign = Fraction(-1)
            piece = piece[1:].strip()
        coeff = Fraction(1)
        exps = [0] * len(variables)
        for factor in piece.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in term {piece!r}")
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            m = _TERM_FACTOR.match(factor)
            if not m or m.group(1) not in var_index:
                raise ValueError(f"unknown factor {factor!r} in {text!r}")
            exps[var_index[m.group(1)]] += int(m.group(2) or 1)
        terms.append((tuple(exps), sign * coeff))
    return SparseMultiPoly(variables, terms)


def _univariate_from_binary(form: SparseMultiPoly) -> tuple[int, list[Fraction]]:
    # strip the second variable's valuation, then dehomogenize at (t, 1);
    # the leading coefficient is the stripped form's pure-first-variable term
    val = min(e[1] for e in form.terms)
    degree = form.total_degree() - val
    coeffs = [Fraction(0)] * (degree + 1)
    for (a, b), c in form.terms.items():
        coeffs[a] += c
    return val, coeffs


def _univariate_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    from .scalars import _frac_poly_divmod, _frac_poly_trim
    a, b = _frac_poly_trim(list(a)), _frac_poly_trim(list(b))
    while b:
        _, r = _frac_poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]  # monic normal form
    return a


def binary_form_gcd(forms: Sequence[SparseMultiPoly]) -> SparseMultiPoly:
    """Monic gcd of homogeneous forms in two variables.

    The gcd of binary forms splits as a power of the second variable (the
    common valuation) times the homogenization of the gcd of the
    dehomogenizations, which absorbs powers of the first variable as powers
    of the parameter.
    """
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        raise ValueError("gcd of all-zero forms")
    variables = forms[0].variables
    if len(variables) != 2:
        raise ValueError("binary_form_gcd needs two-variable forms")
    for f in forms:
        if f.variables != variables or not f.is_homogeneous():
            raise ValueError("inputs must be homogeneous over the same pair")
    common_val = None
    gcd_coeffs: list[Fraction] | None = None
    for f in forms:
        val, coeffs = _univariate_from_binary(f)
        common_val = val if common_val is None else min(common_val, val)
        gcd_coeffs = coeffs if gcd_coeffs is None else _univariate_gcd(gcd_coeffs, coeffs)
    deg = len(gcd_coeffs) - 1
    terms = {(a, deg - a + common_val): c
             for a, c in enumerate(gcd_coeffs) if c != 0}
    return SparseMultiPoly(variables, terms)
