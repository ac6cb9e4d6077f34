from math import comb, gcd

import pytest
from hypothesis import given, strategies as st

from multisec.semigroup import (
    NumericalSemigroup,
    sdn_generators,
    semigroup_contains,
    semigroup_min_and_gcd,
)


def naive_members(generators, limit):
    """Independent oracle: breadth-first closure of sums up to the limit."""
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                v = m + g
                if v <= limit and v not in members:
                    members.add(v)
                    nxt.append(v)
        frontier = nxt
    return members


def test_sdn_generator_examples():
    assert sdn_generators(5, 2).generators == (5, 10)
    assert sdn_generators(4, 6).generators == (4, 6, 4, 1)
    assert sdn_generators(1, 1).generators == (1,)


def test_membership_examples():
    s = NumericalSemigroup((5, 10))
    assert not s.contains(7)
    assert s.contains(15)
    assert s.contains(0)
    assert not s.contains(12)


def test_membership_rejects_negative():
    with pytest.raises(ValueError):
        NumericalSemigroup((2,)).contains(-1)


def test_min_and_gcd_examples():
    assert semigroup_min_and_gcd(NumericalSemigroup((5, 10))) == (5, 5)
    assert semigroup_min_and_gcd(NumericalSemigroup((4, 6))) == (4, 2)
    assert semigroup_min_and_gcd(NumericalSemigroup((3, 4))) == (3, 1)


def test_generator_validation():
    with pytest.raises(ValueError):
        NumericalSemigroup(())
    with pytest.raises(ValueError):
        NumericalSemigroup((0, 3))


def test_oracle_equivalence_sample():
    for d, n in [(5, 2), (4, 2), (7, 3), (3, 5), (8, 8)]:
        s = sdn_generators(d, n)
        members = naive_members(set(s.generators), 200)
        for x in range(201):
            assert semigroup_contains(s, x) == (x in members), (d, n, x)


def test_every_member_divisible_by_gcd():
    for d in range(1, 9):
        for n in range(1, 9):
            s = sdn_generators(d, n)
            g = s.gcd()
            for x in naive_members(set(s.generators), 200):
                assert x % g == 0


def test_min_of_sdn_is_d_when_d_exceeds_n():
    # C(d,1) = d is the least generator whenever the range stops below d
    for d in range(2, 9):
        for n in range(1, d):
            assert sdn_generators(d, n).min_positive() == d


@given(st.lists(st.integers(1, 12), min_size=1, max_size=4),
       st.integers(1, 12), st.integers(0, 60))
def test_membership_monotone_under_adding_generators(gens, extra, x):
    base = NumericalSemigroup(tuple(gens))
    larger = NumericalSemigroup(tuple(gens) + (extra,))
    if base.contains(x):
        assert larger.contains(x)


@given(st.lists(st.integers(1, 9), min_size=1, max_size=3), st.integers(0, 80))
def test_membership_matches_naive(gens, x):
    s = NumericalSemigroup(tuple(gens))
    assert s.contains(x) == (x in naive_members(set(gens), x))


def test_gcd_and_min_consistency():
    for d in range(1, 9):
        for n in range(1, 9):
            s = sdn_generators(d, n)
            m = min(d, n)
            assert s.generators == tuple(comb(d, i) for i in range(1, m + 1))
            assert s.gcd() == gcd(*s.generators) if len(s.generators) > 1 else s.generators[0]
