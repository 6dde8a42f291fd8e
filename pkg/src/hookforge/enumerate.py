"""Exhaustive and seeded-random instance streams for the verification sweeps.

Random generation uses Python's ``random.Random`` (Mersenne Twister MT19937,
seeded with an ``int``) and only its ``random``, ``randrange`` and ``shuffle``
methods, whose output is stable across CPython releases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .posets import FinitePoset
from .solid import SolidPartition
from .trees import RootedTree
from .weights import ShiftWeight
from .young import Partition

PRNG_NAME = "MT19937 (python random.Random) v1"


@dataclass(frozen=True)
class SweepConfig:
    max_partition_size: int = 14
    max_tree_vertices: int = 9
    max_solid_cubes: int = 9
    trial_count: int = 200
    seed: int = 0

    def __post_init__(self):
        for name in ("max_partition_size", "max_tree_vertices", "max_solid_cubes", "trial_count"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def partitions_of(n: int) -> Iterator[Partition]:
    """Every partition of ``n`` once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition(())
        return
    # Classic successor rule on the multiplicity-free list form.
    a = [n]
    while True:
        yield Partition(tuple(a))
        # Drop trailing ones, decrement the last part > 1, refill greedily.
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        a[-1] -= 1
        rem = ones + 1
        k = a[-1]
        while rem > k:
            a.append(k)
            rem -= k
        if rem:
            a.append(rem)


def level_sequence_to_parents(levels: Sequence[int]) -> tuple[int, ...]:
    """Convert a preorder level sequence (root at level 0) to a parent array."""
    parent = []
    last_at: dict[int, int] = {}
    for v, lev in enumerate(levels, start=1):
        parent.append(last_at[lev - 1] if lev else 0)
        last_at[lev] = v
    return tuple(parent)


def level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences of rooted trees on ``n`` vertices.

    Beyer–Hedetniemi successor rule, starting from the path and ending at the
    star; each unlabeled rooted tree appears exactly once.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    L = list(range(n))
    while True:
        yield tuple(L)
        p = max((i for i in range(n) if L[i] > 1), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if L[i] == L[p] - 1)
        shift = p - q
        for i in range(p, n):
            L[i] = L[i - shift]


def rooted_trees(n: int) -> Iterator[RootedTree]:
    for levels in level_sequences(n):
        yield RootedTree(level_sequence_to_parents(levels))


def canonical_form(tree: RootedTree) -> str:
    """AHU-style string; equal for isomorphic rooted trees."""

    def enc(v: int) -> str:
        return "(" + "".join(sorted(enc(c) for c in tree.children[v])) + ")"

    return enc(tree.root)


def solid_partitions_of(n: int) -> Iterator[SolidPartition]:
    """Every lower ideal of the 3-d grid with ``n`` cubes, once each, sorted by cube list."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    level: set[frozenset] = {frozenset()}
    for _ in range(n):
        nxt: set[frozenset] = set()
        for ideal in level:
            for cube in _addable(ideal):
                nxt.add(ideal | {cube})
        level = nxt
    for ideal in sorted(level, key=sorted):
        yield SolidPartition(ideal)


def _addable(ideal: frozenset) -> list[tuple[int, ...]]:
    if not ideal:
        return [(1, 1, 1)]
    cands = {(1, 1, 1)}
    for c in ideal:
        for a in range(3):
            cands.add(c[:a] + (c[a] + 1,) + c[a + 1:])
    return [
        c
        for c in cands
        if c not in ideal and all(c[a] == 1 or c[:a] + (c[a] - 1,) + c[a + 1:] in ideal for a in range(3))
    ]


def plane_partition_counts(n_max: int) -> list[int]:
    """Coefficients of prod_k (1 - x^k)^(-k): the number of ideals of each size."""
    coeffs = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        for _ in range(k):
            for m in range(k, n_max + 1):
                coeffs[m] += coeffs[m - k]
    return coeffs


# Product-of-trees ideals. Elements are tuples of vertex labels, one per factor.


def _lower_covers(factors: Sequence[RootedTree], v: tuple[int, ...]) -> list[tuple[int, ...]]:
    out = []
    for a, t in enumerate(factors):
        p = t.parent[v[a] - 1]
        if p:
            out.append(v[:a] + (p,) + v[a + 1:])
    return out


def random_ideal(factors: Sequence[RootedTree], size: int, seed: int) -> frozenset[tuple[int, ...]]:
    """Grow a lower ideal of the product by adding random addable elements."""
    if size < 1:
        raise ValueError("ideal size must be at least 1")
    total = 1
    for t in factors:
        total *= t.n
    if size > total:
        raise ValueError(f"cannot fit {size} elements in a product of {total}")
    rng = random.Random(seed)
    omega = {tuple(t.root for t in factors)}
    while len(omega) < size:
        cands = set()
        for v in omega:
            for a, t in enumerate(factors):
                for c in t.children[v[a]]:
                    w = v[:a] + (c,) + v[a + 1:]
                    if w not in omega and all(u in omega for u in _lower_covers(factors, w)):
                        cands.add(w)
        pick = sorted(cands)[rng.randrange(len(cands))]
        omega.add(pick)
    return frozenset(omega)


def random_tree(n: int, rng: random.Random) -> RootedTree:
    """Random recursive tree: vertex ``v`` attaches to a uniform earlier vertex."""
    return RootedTree((0,) + tuple(rng.randrange(1, v) for v in range(2, n + 1)))


def random_poset(n: int, density: float, seed: int) -> FinitePoset:
    """Erdős–Rényi DAG on a random linear order, closed transitively."""
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    rels = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                rels.append((order[a], order[b]))
    return FinitePoset(n, tuple(rels))


def random_weight(support_box: Sequence[int], seed: int, max_value: int = 3) -> ShiftWeight:
    """Integer weights in ``0..max_value`` on every shift inside ``support_box``."""
    rng = random.Random(seed)
    table = {m: rng.randrange(max_value + 1) for m in product(*(range(s) for s in support_box))}
    return ShiftWeight(table=table)
