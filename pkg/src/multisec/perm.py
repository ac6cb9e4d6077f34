"""Finite permutation groups, induced actions, and orbit decomposition.

Groups are given by generators on {0, ..., k-1}; full enumeration is a
capped breadth-first closure, since every group used here is tiny but the
API must fail loudly rather than hang.  Actions on combinatorial families
(subsets of a fiber, star-patterns on three blocks) store, per generator,
the induced index map on an opaque list of point labels; orbits come from
union-find over those maps.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Sequence


class CapExceeded(RuntimeError):
    """Group closure grew past the requested cap."""


class BadIndex(ValueError):
    """Parameter outside the supported range."""


class Permutation:
    """A bijection of {0, ..., k-1}, stored as the image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (a * b)(x) = a(b(x))
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, im in enumerate(self.images):
            inv[im] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == im for i, im in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


class PermGroup:
    """A permutation group given by generators; elements cached on demand."""

    def __init__(self, degree: int, generators: Sequence[Permutation]):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.degree = degree
        self.generators = generators
        self._elements: tuple[Permutation, ...] | None = None

    def elements(self, cap: int = 10 ** 6) -> tuple[Permutation, ...]:
        """Breadth-first closure of the generators, in insertion order."""
        if self._elements is not None:
            return self._elements
        identity = Permutation.identity(self.degree)
        seen = {identity}
        order = [identity]
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = x * g
                    if y not in seen:
                        seen.add(y)
                        order.append(y)
                        nxt.append(y)
                        if len(order) > cap:
                            raise CapExceeded(
                                f"group closure exceeded cap {cap}")
            frontier = nxt
        self._elements = tuple(order)
        return self._elements

    def order(self, cap: int = 10 ** 6) -> int:
        return len(self.elements(cap))


def enumerate_group(group: PermGroup, cap: int = 10 ** 6) -> tuple[Permutation, ...]:
    return group.elements(cap)


def symmetric_group(d: int) -> PermGroup:
    """The symmetric group on d points, generated by a swap and a d-cycle."""
    if d < 1:
        raise BadIndex(f"symmetric group degree must be >= 1, got {d}")
    if d == 1:
        return PermGroup(1, [Permutation.identity(1)])
    swap = list(range(d))
    swap[0], swap[1] = 1, 0
    cycle = [(i + 1) % d for i in range(d)]
    return PermGroup(d, [Permutation(swap), Permutation(cycle)])


# The wreath group on three blocks of two: points (p, q) with p in {1,2,3}
# and q in {1,2}.  Generators are described semantically so that induced
# actions on other block-respecting structures reuse the same list.
WREATH_POINTS: tuple[tuple[int, int], ...] = tuple(
    (p, q) for p in (1, 2, 3) for q in (1, 2))

_BLOCK_SWAP = {1: 2, 2: 1}


def _wreath_semantic_generators():
    gens: list[tuple[str, object]] = [("swap", p) for p in (1, 2, 3)]
    gens.append(("blocks", {1: 2, 2: 1, 3: 3}))
    gens.append(("blocks", {1: 2, 2: 3, 3: 1}))
    return gens


def _apply_wreath_generator(gen, point: tuple[int, int]) -> tuple[int, int]:
    kind, data = gen
    p, q = point
    if kind == "swap":
        return (p, _BLOCK_SWAP[q]) if p == data else (p, q)
    return (data[p], q)


def wreath_product_3_2() -> PermGroup:
    """The full wreath group of three blocks of two, order 48, on 6 points."""
    index = {pt: i for i, pt in enumerate(WREATH_POINTS)}
    perms = []
    for gen in _wreath_semantic_generators():
        images = [index[_apply_wreath_generator(gen, pt)] for pt in WREATH_POINTS]
        perms.append(Permutation(images))
    return PermGroup(6, perms)


class GroupAction:
    """A group acting on an ordered list of opaque point labels."""

    def __init__(self, group: PermGroup, points: Sequence[str],
                 generator_images: Sequence[Sequence[int]]):
        points = tuple(points)
        generator_images = tuple(tuple(row) for row in generator_images)
        if len(generator_images) != len(group.generators):
            raise ValueError("one image row per generator required")
        n = len(points)
        for row in generator_images:
            if sorted(row) != list(range(n)):
                raise ValueError(f"image row is not a bijection: {row}")
        self.group = group
        self.points = points
        self.generator_images = generator_images

    def __len__(self) -> int:
        return len(self.points)


class OrbitDecomposition:
    """Disjoint orbits of a GroupAction, by point index."""

    def __init__(self, action: GroupAction, orbits: Sequence[Sequence[int]]):
        self.action = action
        self.orbits = tuple(tuple(o) for o in orbits)

    @property
    def transitive(self) -> bool:
        return len(self.orbits) == 1

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    def label_sets(self) -> list[list[str]]:
        return [sorted(self.action.points[i] for i in orbit)
                for orbit in self.orbits]

    def to_json_dict(self) -> dict:
        return {
            "orbits": self.label_sets(),
            "sizes": list(self.sizes()),
            "transitive": self.transitive,
        }


def orbit_decomposition(action: GroupAction) -> OrbitDecomposition:
    """Union-find over the generator image maps; deterministic output."""
    n = len(action.points)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in action.generator_images:
        for i, im in enumerate(row):
            ri, rm = find(i), find(im)
            if ri != rm:
                parent[max(ri, rm)] = min(ri, rm)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    orbits = [tuple(groups[root]) for root in sorted(groups)]
    return OrbitDecomposition(action, orbits)


def induced_subset_action(d: int, i: int) -> GroupAction:
    """The symmetric group on d points acting on its i-element subsets."""
    if not 1 <= i <= d:
        raise BadIndex(f"subset size {i} out of range 1..{d}")
    group = symmetric_group(d)
    subsets = list(combinations(range(d), i))
    index = {s: k for k, s in enumerate(subsets)}
    labels = ["{" + ",".join(map(str, s)) + "}" for s in subsets]
    rows = []
    for g in group.generators:
        rows.append([index[tuple(sorted(g(x) for x in s))] for s in subsets])
    return GroupAction(group, labels, rows)


def cube_strata_action(wildcards: int) -> GroupAction:
    """The wreath group acting on three-slot patterns over {1, 2, *}.

    A pattern fixes one symbol per block, a * leaving the block free; the
    per-block swaps exchange 1 and 2 in their slot and the block symmetric
    group permutes slots.  Point counts are 8, 12, 6 for 0, 1, 2 stars.
    """
    if wildcards not in (0, 1, 2):
        raise BadIndex(f"wildcards must be 0, 1, or 2, got {wildcards}")
    group = wreath_product_3_2()
    patterns = [pat for pat in product((1, 2, "*"), repeat=3)
                if sum(1 for x in pat if x == "*") == wildcards]
    index = {pat: k for k, pat in enumerate(patterns)}
    labels = ["(" + ",".join(map(str, pat)) + ")" for pat in patterns]
    rows = []
    for gen in _wreath_semantic_generators():
        kind, data = gen
        row = []
        for pat in patterns:
            out: list[object] = [None, None, None]
            for slot, symbol in enumerate(pat, start=1):
                if kind == "swap":
                    new_slot = slot
                    new_symbol = (_BLOCK_SWAP[symbol]
                                  if slot == data and symbol != "*" else symbol)
                else:
                    new_slot = data[slot]
                    new_symbol = symbol
                out[new_slot - 1] = new_symbol
            row.append(index[tuple(out)])
        rows.append(row)
    return GroupAction(group, labels, rows)
