"""Solid partitions: finite lower ideals of the 3-dimensional grid.

Cubes are 1-based triples ``(i, j, k)``.  The 1-dimensional hooks ``R`` are
unions of axis rays, the 2-dimensional hooks ``Q`` unions of coordinate
quadrants, and ``V`` counts cubes in the whole octant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .major import Multiset
from .posets import LimitExceeded, le_count, le_limit, solid_poset

Cube = tuple[int, int, int]
KINDS = ("R", "Q", "V")


class IdealError(ValueError):
    pass


@dataclass(frozen=True)
class SolidPartition:
    cubes: frozenset[Cube] = frozenset()
    _sorted: tuple[Cube, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        cubes = frozenset(tuple(int(c) for c in cube) for cube in self.cubes)
        for cube in cubes:
            if len(cube) != 3 or min(cube) < 1:
                raise IdealError(f"bad cube {cube}: need three coordinates >= 1")
        for cube in sorted(cubes):
            for axis in range(3):
                if cube[axis] > 1:
                    lower = cube[:axis] + (cube[axis] - 1,) + cube[axis + 1:]
                    if lower not in cubes:
                        raise IdealError(f"cube {cube} present but {lower} missing; not a lower ideal")
        object.__setattr__(self, "cubes", cubes)
        object.__setattr__(self, "_sorted", tuple(sorted(cubes)))

    def __len__(self) -> int:
        return len(self.cubes)

    def __contains__(self, cube) -> bool:
        return tuple(cube) in self.cubes

    def __iter__(self):
        return iter(self._sorted)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "SolidPartition":
        """Plane-partition form: ``rows[i][j]`` is the height of column ``(i+1, j+1)``."""
        cubes = set()
        for i, row in enumerate(rows, start=1):
            for j, h in enumerate(row, start=1):
                if h < 0:
                    raise IdealError(f"negative height at ({i},{j})")
                cubes.update((i, j, k) for k in range(1, h + 1))
        return cls(frozenset(cubes))

    @classmethod
    def box(cls, a: int, b: int, c: int) -> "SolidPartition":
        return cls(frozenset((i, j, k) for i in range(1, a + 1) for j in range(1, b + 1) for k in range(1, c + 1)))

    def to_matrix(self) -> list[list[int]]:
        if not self.cubes:
            return []
        rows = max(c[0] for c in self.cubes)
        cols = max(c[1] for c in self.cubes)
        m = [[0] * cols for _ in range(rows)]
        for i, j, k in self.cubes:
            m[i - 1][j - 1] = max(m[i - 1][j - 1], k)
        return [r[: max((j + 1 for j, h in enumerate(r) if h), default=0)] for r in m]


def parse_solid(data) -> SolidPartition:
    """Accept a list of ``[i, j, k]`` triples or a plane-partition matrix.

    A matrix is recognized when its rows are not all length-3 triples, or
    when passed as ``{"matrix": [...]}``.
    """
    if isinstance(data, dict):
        if "matrix" in data:
            return SolidPartition.from_matrix(data["matrix"])
        if "cubes" in data:
            data = data["cubes"]
        else:
            raise IdealError("expected 'cubes' or 'matrix' key")
    if not data:
        return SolidPartition()
    if all(isinstance(r, (list, tuple)) and len(r) == 3 for r in data):
        triples = [tuple(r) for r in data]
        if len(set(triples)) != len(triples):
            raise IdealError("duplicate cubes")
        return SolidPartition(frozenset(triples))
    return SolidPartition.from_matrix(data)


def _check(lam: SolidPartition, cube: Sequence[int]) -> Cube:
    cube = tuple(int(c) for c in cube)
    if cube not in lam.cubes:
        raise IdealError(f"cube {cube} is not in the solid partition")
    return cube


def _ray(lam: SolidPartition, cube: Cube, axis: int, sign: int) -> int:
    # Cubes strictly beyond `cube` along one axis direction.
    if sign < 0:
        return cube[axis] - 1
    c = list(cube)
    n = 0
    while True:
        c[axis] += 1
        if tuple(c) not in lam.cubes:
            return n
        n += 1


def ray_hook(lam: SolidPartition, cube: Sequence[int], signs: tuple[int, int, int]) -> int:
    """Size of the union of three axis rays from ``cube``, one per axis,
    pointing up (``+1``) or down (``-1``) as given by ``signs``."""
    cube = _check(lam, cube)
    return 1 + sum(_ray(lam, cube, a, s) for a, s in enumerate(signs))


def r_hook(lam: SolidPartition, i: int, j: int, k: int) -> int:
    return ray_hook(lam, (i, j, k), (1, 1, 1))


def r_hook_star(lam: SolidPartition, i: int, j: int, k: int) -> int:
    return ray_hook(lam, (i, j, k), (-1, -1, -1))


def _quadrant_union(lam: SolidPartition, cube: Cube, up: bool) -> int:
    seen = set()
    for fixed in range(3):
        for other in lam.cubes:
            if other[fixed] != cube[fixed]:
                continue
            if all((other[a] >= cube[a]) if up else (other[a] <= cube[a]) for a in range(3) if a != fixed):
                seen.add(other)
    return len(seen)


def q_hook(lam: SolidPartition, i: int, j: int, k: int) -> int:
    return _quadrant_union(lam, _check(lam, (i, j, k)), True)


def q_hook_star(lam: SolidPartition, i: int, j: int, k: int) -> int:
    return _quadrant_union(lam, _check(lam, (i, j, k)), False)


def volume(lam: SolidPartition, i: int, j: int, k: int) -> int:
    cube = _check(lam, (i, j, k))
    return sum(1 for c in lam.cubes if all(c[a] >= cube[a] for a in range(3)))


def anti_volume(lam: SolidPartition, i: int, j: int, k: int) -> int:
    _check(lam, (i, j, k))
    return i * j * k


_STATS = {
    "R": (r_hook, r_hook_star),
    "Q": (q_hook, q_hook_star),
    "V": (volume, anti_volume),
}


def stat_multisets(lam: SolidPartition, kind: str) -> tuple[Multiset, Multiset]:
    if kind not in _STATS:
        raise ValueError(f"unknown solid statistic {kind!r}; choose from {KINDS}")
    plain, starred = _STATS[kind]
    return Multiset(plain(lam, *c) for c in lam), Multiset(starred(lam, *c) for c in lam)


def stat_table(lam: SolidPartition, kind: str) -> list[tuple[Cube, int, int]]:
    plain, starred = _STATS[kind]
    return [(c, plain(lam, *c), starred(lam, *c)) for c in lam]


def comparable_pairs(lam: SolidPartition, max_free: int) -> int:
    """Ordered pairs ``u <= v`` of cubes differing in at most ``max_free`` coordinates.

    Independent count of both sides of the sum identities: ``max_free=1``
    for ``R``, ``2`` for ``Q`` and ``3`` for ``V``.
    """
    cubes = list(lam.cubes)
    return sum(
        1
        for u in cubes
        for v in cubes
        if all(a <= b for a, b in zip(u, v)) and sum(a != b for a, b in zip(u, v)) <= max_free
    )


def _push(cubes: Iterable[Cube], axis: int) -> list[Cube]:
    lines: dict[tuple, int] = {}
    for c in cubes:
        key = c[:axis] + c[axis + 1:]
        lines[key] = lines.get(key, 0) + 1
    return sorted(key[:axis] + (t,) + key[axis:] for key, count in lines.items() for t in range(1, count + 1))


@dataclass
class SpaceShuffleTrace:
    stages: list[list[Cube]]  # X, X', X'', Y
    sums: list[int]  # R*(X), R°(X'), R°°(X''), R(Y)

    @property
    def ok(self) -> bool:
        s = self.sums
        return s[0] <= s[1] <= s[2] <= s[3]


# After pushing along an axis, that axis' ray is counted upward.
_CHAIN_SIGNS = ((-1, -1, -1), (1, -1, -1), (1, 1, -1), (1, 1, 1))


def shuffle_space(lam: SolidPartition, X: Iterable[Sequence[int]]) -> SpaceShuffleTrace:
    """Compact ``X`` toward the corner along x, then y, then z.

    Every stage stays inside ``lam``.  The hook of each stage has its rays
    flipped upward on the axes already pushed, so the four sums form a
    non-decreasing chain from ``R*(X)`` to ``R(Y)``.
    """
    X = sorted({_check(lam, c) for c in X})
    stages = [X]
    for axis in range(3):
        stages.append(_push(stages[-1], axis))
    for stage in stages:
        for c in stage:
            assert c in lam.cubes
    sums = [sum(ray_hook(lam, c, signs) for c in stage) for stage, signs in zip(stages, _CHAIN_SIGNS)]
    return SpaceShuffleTrace(stages, sums)


@dataclass
class BoundPair:
    bound_v: Fraction
    bound_vstar: Fraction
    exact: int | None

    @property
    def ordered(self) -> bool:
        ok = self.bound_v >= self.bound_vstar
        if self.exact is not None:
            ok = ok and self.exact >= self.bound_v
        return ok


def le_bound_pair(lam: SolidPartition, threshold: int | None = None) -> BoundPair:
    """The two upper-ideal lower bounds on linear extensions, plus the exact count when affordable."""
    n = len(lam)
    v, vstar = stat_multisets(lam, "V")
    bv = Fraction(factorial(n), v.product())
    bvs = Fraction(factorial(n), vstar.product())
    threshold = le_limit() if threshold is None else threshold
    exact = None
    if n <= threshold:
        try:
            exact = le_count(solid_poset(lam.cubes), limit=threshold)
        except LimitExceeded:
            exact = None
    return BoundPair(bv, bvs, exact)


def brute_force_ideals(n: int) -> set[frozenset[Cube]]:
    """All lower ideals of size ``n`` found by testing every ``n``-subset of the
    ``n x n x n`` box.  Exponential; intended for ``n <= 3``."""
    box = [(i, j, k) for i in range(1, n + 1) for j in range(1, n + 1) for k in range(1, n + 1)]
    out = set()
    for sub in combinations(box, n):
        s = frozenset(sub)
        if all(
            c[:a] + (c[a] - 1,) + c[a + 1:] in s for c in s for a in range(3) if c[a] > 1
        ):
            out.add(s)
    return out
