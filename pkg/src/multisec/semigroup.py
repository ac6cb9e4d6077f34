"""Numerical semigroups of attainable multi-section degrees.

A semigroup is given by positive generators; membership reduces by the gcd
first and then runs a coin-problem dynamic program, which keeps the test
correct for non-coprime generator sets like {4, 6}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd


@dataclass(frozen=True)
class NumericalSemigroup:
    """Generators as reported (duplicates kept); computation deduplicates."""

    generators: tuple[int, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("at least one generator required")
        if any(g < 1 for g in self.generators):
            raise ValueError(f"generators must be positive: {self.generators}")
        object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))

    def gcd(self) -> int:
        return gcd(*self.generators) if len(self.generators) > 1 else self.generators[0]

    def min_positive(self) -> int:
        return min(self.generators)

    def contains(self, x: int) -> bool:
        if x < 0:
            raise ValueError("membership is defined for nonnegative integers")
        if x == 0:
            return True
        g = self.gcd()
        if x % g:
            return False
        target = x // g
        coins = sorted({c // g for c in self.generators})
        reachable = [False] * (target + 1)
        reachable[0] = True
        for v in range(1, target + 1):
            for c in coins:
                if c > v:
                    break
                if reachable[v - c]:
                    reachable[v] = True
                    break
        return reachable[target]


def sdn_generators(d: int, n: int) -> NumericalSemigroup:
    """The degree semigroup of a d-sheeted pencil twisted in degree n.

    Generators are the binomials C(d, i) for i = 1, ..., min(d, n).
    """
    if d < 1 or n < 1:
        raise ValueError(f"d and n must be >= 1, got d={d}, n={n}")
    return NumericalSemigroup(tuple(comb(d, i) for i in range(1, min(d, n) + 1)))


def semigroup_contains(s: NumericalSemigroup, x: int) -> bool:
    return s.contains(x)


def semigroup_min_and_gcd(s: NumericalSemigroup) -> tuple[int, int]:
    return s.min_positive(), s.gcd()
