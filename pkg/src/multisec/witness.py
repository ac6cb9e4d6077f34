"""Parameter selection and inequality certificates for witness families.

All integer arithmetic: given block sizes a, b the family has n = 4ab and
d = n - 1; a divisor class spans a linear system of projective dimension
at most n - b - (a-1)(b-1), which always leaves a basepoint; and for a
degree-e comparison curve one picks the cheapest (a, b) with 4ab > e + 1,
which automatically certifies e < 4ab - 1.
"""

from __future__ import annotations

from dataclasses import dataclass


class BadInput(ValueError):
    """Nonpositive parameter."""


@dataclass(frozen=True)
class WitnessReport:
    a: int
    b: int
    n: int
    d: int
    span_bound: int
    basepoint_ok: bool
    e: int | None = None
    no_section_ok: bool | None = None

    def __post_init__(self):
        if self.n != 4 * self.a * self.b or self.d != self.n - 1:
            raise ValueError("inconsistent witness parameters")

    def to_json_dict(self) -> dict:
        out = {
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "d": self.d,
            "min_degree_claim": self.d,
            "span_bound": self.span_bound,
            "basepoint_ok": self.basepoint_ok,
        }
        if self.e is not None:
            out["e"] = self.e
            out["no_section_ok"] = self.no_section_ok
        return out


def _require_positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 1:
            raise BadInput(f"{name} must be >= 1, got {value}")


def witness_parameters(a: int, b: int) -> WitnessReport:
    """n = 4ab and d = n - 1, with the claimed minimal degree d = 4ab - 1."""
    _require_positive(a=a, b=b)
    span, ok = span_and_basepoint(a, b)
    return WitnessReport(a=a, b=b, n=4 * a * b, d=4 * a * b - 1,
                         span_bound=span, basepoint_ok=ok)


def span_and_basepoint(a: int, b: int) -> tuple[int, bool]:
    """Span dimension bound n - b - (a-1)(b-1) and the basepoint criterion.

    The system is spanned by span_bound + 1 hypersurfaces of projective
    n-space, so it has a common point whenever span_bound + 1 <= n.
    """
    _require_positive(a=a, b=b)
    n = 4 * a * b
    span_bound = n - b - (a - 1) * (b - 1)
    return span_bound, span_bound + 1 <= n


def choose_ab_and_certify(a_prime: int, b_prime: int, e: int) -> WitnessReport:
    """Cheapest (a, b) with a >= a', b >= b', 4ab > e + 1; ties go to smaller a.

    The minimizer takes, for each a, the least admissible b, and stops
    scanning once 4*a*b' alone exceeds the best product found.
    """
    _require_positive(a_prime=a_prime, b_prime=b_prime, e=e)
    best: tuple[int, int] | None = None
    a = a_prime
    while best is None or 4 * a * b_prime <= 4 * best[0] * best[1]:
        b = max(b_prime, (e + 1) // (4 * a) + 1)
        if best is None or 4 * a * b < 4 * best[0] * best[1]:
            best = (a, b)
        a += 1
    a, b = best
    report = witness_parameters(a, b)
    return WitnessReport(a=a, b=b, n=report.n, d=report.d,
                         span_bound=report.span_bound,
                         basepoint_ok=report.basepoint_ok,
                         e=e, no_section_ok=e < 4 * a * b - 1)
