"""Rooted trees: branch sizes, distances, increasing-tree counts and shuffling.

Vertices are labeled ``1..n``.  A tree is given by its parent array, with
``0`` (or ``None``) marking the root.  Distances count vertices on the path to
the root, so the root has distance 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod
from typing import Iterable, Sequence

from .major import Multiset


class TreeError(ValueError):
    pass


@dataclass(frozen=True)
class RootedTree:
    parent: tuple[int, ...]
    root: int = field(init=False)
    children: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    depth: tuple[int, ...] = field(init=False, repr=False, compare=False)
    branch: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        par = tuple(0 if p is None else int(p) for p in self.parent)
        n = len(par)
        if n == 0:
            raise TreeError("a rooted tree needs at least one vertex")
        roots = [v for v in range(1, n + 1) if par[v - 1] == 0]
        if len(roots) != 1:
            raise TreeError(f"expected exactly one root, found {len(roots)}: {roots}")
        for v, p in enumerate(par, start=1):
            if p == v or not 0 <= p <= n:
                raise TreeError(f"vertex {v} has invalid parent {p}")
        kids: list[list[int]] = [[] for _ in range(n + 1)]
        for v, p in enumerate(par, start=1):
            if p:
                kids[p].append(v)
        # Depths by BFS from the root; anything unreached sits on a cycle.
        depth = [0] * (n + 1)
        root = roots[0]
        depth[root] = 1
        order = [root]
        for v in order:
            for c in kids[v]:
                depth[c] = depth[v] + 1
                order.append(c)
        if len(order) != n:
            stuck = sorted(set(range(1, n + 1)) - set(order))
            raise TreeError(f"vertices {stuck} do not reach the root (cycle)")
        branch = [1] * (n + 1)
        for v in reversed(order):
            if par[v - 1]:
                branch[par[v - 1]] += branch[v]
        object.__setattr__(self, "parent", par)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "children", tuple(tuple(k) for k in kids))
        object.__setattr__(self, "depth", tuple(depth))
        object.__setattr__(self, "branch", tuple(branch))

    @property
    def n(self) -> int:
        return len(self.parent)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def b(self, v: int) -> int:
        return self.branch[v]

    def d(self, v: int) -> int:
        return self.depth[v]

    def is_ancestor(self, u: int, v: int) -> bool:
        """True when ``u`` lies on the path from ``v`` to the root (``u == v`` allowed)."""
        while v:
            if v == u:
                return True
            v = self.parent[v - 1]
        return False

    def __str__(self) -> str:
        return ",".join(map(str, self.parent))


def parse_tree(text: str) -> RootedTree:
    """Parse a parent array such as ``"0,1,1,1,2,3,5,5"``."""
    tokens = [t.strip() for t in text.split(",")]
    pos = 0
    parent = []
    for t in tokens:
        if not t.isdigit():
            raise ValueError(f"bad parent entry {t!r} at position {pos}")
        parent.append(int(t))
        pos += len(t) + 1
    return RootedTree(tuple(parent))


def path_tree(n: int) -> RootedTree:
    return RootedTree(tuple(range(n)))


def star_tree(n: int) -> RootedTree:
    return RootedTree((0,) + (1,) * (n - 1))


def branch_sizes(tree: RootedTree) -> Multiset:
    return Multiset(tree.branch[1:])


def distances(tree: RootedTree) -> Multiset:
    return Multiset(tree.depth[1:])


def it_count(tree: RootedTree) -> int:
    """Number of increasing labelings, ``n! / prod(b(v))``."""
    denom = prod(tree.branch[1:])
    count, rem = divmod(factorial(tree.n), denom)
    assert rem == 0, f"branch product {denom} does not divide {tree.n}!"
    return count


def is_root_path(tree: RootedTree) -> bool:
    return all(len(k) <= 1 for k in tree.children)


def _branch_root(tree: RootedTree, top: int, v: int) -> int:
    # The child of `top` whose subtree contains v.
    while tree.parent[v - 1] != top:
        v = tree.parent[v - 1]
    return v


def _shuffle(tree: RootedTree, top: int, X: Sequence[int], out: list[int]) -> None:
    if not X:
        return
    out.append(top)
    w = min(X, key=lambda v: (tree.depth[v], v))
    groups: dict[int, list[int]] = {}
    for v in X:
        if v != w:
            groups.setdefault(_branch_root(tree, top, v), []).append(v)
    for child in sorted(groups):
        _shuffle(tree, child, groups[child], out)


def shuffle_tree(tree: RootedTree, X: Iterable[int], top: int | None = None) -> list[int]:
    """Move the closest vertex of ``X`` to the root, then recurse into branches.

    The vertex with least distance (smallest label on ties) is moved to the
    root; the other vertices stay in their own branches and are shuffled
    there.  ``top`` restricts the procedure to the subtree hanging from that
    vertex, which must be an ancestor of every element of ``X``.

    The result ``Y`` satisfies ``sum(b over Y) >= sum(d over X)``.
    """
    X = [int(v) for v in X]
    for v in X:
        if not 1 <= v <= tree.n:
            raise TreeError(f"vertex {v} is not in the tree")
    if len(set(X)) != len(X):
        raise ValueError("vertex subset contains duplicates")
    top = tree.root if top is None else top
    for v in X:
        if not tree.is_ancestor(top, v):
            raise TreeError(f"vertex {v} is not below {top}")
    out: list[int] = []
    _shuffle(tree, top, X, out)
    return sorted(out)


@dataclass
class TreeShuffleReport:
    X: list[int]
    Y: list[int]
    distance_sum_X: int
    branch_sum_Y: int
    # The reversed comparison, kept for reference; it does not hold in general.
    branch_sum_X: int
    distance_sum_Y: int

    @property
    def ok(self) -> bool:
        return len(self.X) == len(self.Y) and self.branch_sum_Y >= self.distance_sum_X


def verify_tree_shuffle(tree: RootedTree, X: Iterable[int]) -> TreeShuffleReport:
    X = sorted(int(v) for v in X)
    Y = shuffle_tree(tree, X)
    return TreeShuffleReport(
        X=X,
        Y=Y,
        distance_sum_X=sum(tree.depth[v] for v in X),
        branch_sum_Y=sum(tree.branch[v] for v in Y),
        branch_sum_X=sum(tree.branch[v] for v in X),
        distance_sum_Y=sum(tree.depth[v] for v in Y),
    )
