"""Exact scalar arithmetic: rationals and cyclotomic numbers.

Rationals are plain ``fractions.Fraction`` values.  Fraction already keeps
the normal form the rest of the package relies on (gcd-reduced numerator
over a positive denominator, unbounded integers), so no wrapper type is
introduced; ``Rational`` is an alias.

A cyclotomic number of conductor d is an element of Q[z]/(Phi_d(z)) where
Phi_d is the d-th cyclotomic polynomial.  It is stored as the canonical
reduced representative: a coefficient tuple of length phi(d) = deg Phi_d
over Fraction, constant term first.  Phi_d itself is computed by the
recursive quotient

    Phi_d(x) = (x^d - 1) / prod(Phi_e(x) for e | d, e < d)

which is cheap at the conductors exercised here (2, 3, 4, 6) and correct
for every d.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction]


def euler_phi(d: int) -> int:
    """Euler totient by trial-division factorization (d is tiny here)."""
    if d < 1:
        raise ValueError("conductor must be positive")
    result = d
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # den is monic; division is exact for cyclotomic quotients
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for k in range(dd + 1):
            num[i - dd + k] -= c * den[k]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Coefficients of Phi_d, constant term first, monic."""
    if d < 1:
        raise ValueError("conductor must be positive")
    if d == 1:
        return (-1, 1)
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly = _int_poly_div_exact(poly, list(cyclotomic_polynomial(e)))
    return tuple(poly)


def _frac_poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _frac_poly_trim(out)


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and _frac_poly_trim(a):
        da = len(a) - 1
        c = a[-1] / lead
        quot[da - db] = c
        for k in range(db + 1):
            a[da - db + k] -= c * b[k]
        a = _frac_poly_trim(a)
        if not a:
            break
    return _frac_poly_trim(quot), a


def _frac_poly_xgcd(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    # returns (g, u) with u*a = g (mod b); g is a nonzero constant when
    # gcd(a, b) = 1, which holds for any a not divisible by irreducible b
    r0, r1 = list(a), list(b)
    u0, u1 = [Fraction(1)], []
    while r1:
        q, r = _frac_poly_divmod(r0, r1)
        r0, r1 = r1, r
        qu = _frac_poly_mul(q, u1)
        nu = list(u0) + [Fraction(0)] * max(0, len(qu) - len(u0))
        for i, c in enumerate(qu):
            nu[i] -= c
        u0, u1 = u1, _frac_poly_trim(nu)
    return r0, u0


class Cyclotomic:
    """Immutable element of the cyclotomic field of a fixed conductor.

    Supports mixed arithmetic with int and Fraction; elements of different
    conductors do not mix (the constructions here never need it).
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs) -> None:
        phi = euler_phi(conductor)
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > phi:
            vec = self._reduce(conductor, vec)
        vec += [Fraction(0)] * (phi - len(vec))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(vec))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @staticmethod
    def _reduce(conductor: int, vec: list[Fraction]) -> list[Fraction]:
        mod = cyclotomic_polynomial(conductor)
        deg = len(mod) - 1
        vec = list(vec)
        for i in range(len(vec) - 1, deg - 1, -1):
            c = vec[i]
            if c == 0:
                continue
            for k in range(deg + 1):
                vec[i - deg + k] -= c * mod[k]
        return _frac_poly_trim(vec[:deg] + [Fraction(0)])

    @classmethod
    def zeta(cls, conductor: int) -> "Cyclotomic":
        """A primitive root of unity of the given conductor."""
        return cls(conductor, [0, 1])

    @classmethod
    def from_rational(cls, conductor: int, value: RationalLike) -> "Cyclotomic":
        return cls(conductor, [Fraction(value)])

    @classmethod
    def one(cls, conductor: int) -> "Cyclotomic":
        return cls.from_rational(conductor, 1)

    @classmethod
    def zero(cls, conductor: int) -> "Cyclotomic":
        return cls.from_rational(conductor, 0)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                raise ValueError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.conductor, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.conductor,
                          [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.conductor,
                          [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.conductor,
                          _frac_poly_mul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("cyclotomic division by zero")
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        g, u = _frac_poly_xgcd(_frac_poly_trim(list(self.coeffs)), mod)
        # Phi_d is irreducible over Q, so g is a nonzero constant
        scale = Fraction(1) / g[0]
        return Cyclotomic(self.conductor, [c * scale for c in u])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.one(self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return any(c != 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyclotomic):
            if other.conductor == self.conductor:
                return self.coeffs == other.coeffs
            return (self.is_rational() and other.is_rational()
                    and self.coeffs[0] == other.coeffs[0])
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {list(self.coeffs)!r})"

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            z = "" if i == 0 else (f"z{self.conductor}" if i == 1
                                   else f"z{self.conductor}^{i}")
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(z)
            elif c == -1:
                parts.append(f"-{z}")
            else:
                parts.append(f"{c}*{z}")
        return " + ".join(parts) if parts else "0"


Scalar = Union[Fraction, Cyclotomic]


def scalar_is_zero(x) -> bool:
    return not x if isinstance(x, Cyclotomic) else x == 0


def as_fraction(x) -> Fraction:
    """Cast an exact scalar down to Fraction, failing if it is irrational."""
    if isinstance(x, Cyclotomic):
        return x.to_fraction()
    return Fraction(x)
