"""Lower ideals in products of rooted trees with weighted hook statistics.

An element ``v = (v_1, ..., v_d)`` picks one vertex per factor tree.  For a
shift ``m`` we write ``v ->_m w`` when every ``w_i`` is ``v_i`` or one of its
descendants and ``d(w_i) - d(v_i) = m_i``.  The hook ``H(v)`` sums ``g(m)`` over
elements reachable from ``v``; the anti-hook ``H*(v)`` over elements reaching
``v``.

With this reading chains reproduce Young-diagram hooks and a single tree
reproduces branch sizes and distances.  Passing ``reverse=True`` uses the
ancestor reading instead, which swaps ``H`` and ``H*``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .major import Multiset
from .trees import RootedTree, shuffle_tree
from .weights import ShiftWeight

Element = tuple[int, ...]


class IdealError(ValueError):
    pass


@dataclass(frozen=True)
class TreeProductIdeal:
    factors: tuple[RootedTree, ...]
    elements: frozenset[Element]
    _order: tuple[Element, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise IdealError("need at least one factor tree")
        d = len(factors)
        elems = frozenset(tuple(int(c) for c in e) for e in self.elements)
        for e in elems:
            if len(e) != d:
                raise IdealError(f"element {e} has {len(e)} coordinates, expected {d}")
            for a, (c, t) in enumerate(zip(e, factors)):
                if not 1 <= c <= t.n:
                    raise IdealError(f"element {e}: vertex {c} is not in factor {a + 1}")
        for e in elems:
            for a, t in enumerate(factors):
                p = t.parent[e[a] - 1]
                if p:
                    lower = e[:a] + (p,) + e[a + 1:]
                    if lower not in elems:
                        raise IdealError(f"element {e} present but {lower} missing; not a lower ideal")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "elements", elems)
        key = lambda e: tuple((t.depth[c], c) for t, c in zip(factors, e))  # noqa: E731
        object.__setattr__(self, "_order", tuple(sorted(elems, key=key)))

    @property
    def dim(self) -> int:
        return len(self.factors)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self._order)

    def __contains__(self, e) -> bool:
        return tuple(e) in self.elements

    def shift(self, v: Element, w: Element) -> tuple[int, ...] | None:
        """The shift ``m`` with ``v ->_m w``, or ``None`` if ``w`` is not below ``v``."""
        m = []
        for t, a, b in zip(self.factors, v, w):
            if not t.is_ancestor(a, b):
                return None
            m.append(t.depth[b] - t.depth[a])
        return tuple(m)


def chain_product(cells: Iterable[Sequence[int]], dim: int) -> TreeProductIdeal:
    """Embed a Young diagram or solid partition as an ideal in a product of paths.

    In a path tree vertex ``v`` sits at distance ``v``, so coordinates carry over
    unchanged.
    """
    cells = [tuple(c) for c in cells]
    length = max((max(c) for c in cells), default=1)
    path = RootedTree(tuple(range(length)))
    return TreeProductIdeal((path,) * dim, frozenset(cells))


def single_tree(tree: RootedTree) -> TreeProductIdeal:
    return TreeProductIdeal((tree,), frozenset((v,) for v in tree.vertices()))


def _check(omega: TreeProductIdeal, v) -> Element:
    v = tuple(int(c) for c in v)
    if v not in omega.elements:
        raise IdealError(f"element {v} is not in the ideal")
    return v


def hook_pair(omega: TreeProductIdeal, g: ShiftWeight, v, reverse: bool = False):
    v = _check(omega, v)
    H = Hs = 0
    for w in omega.elements:
        m = omega.shift(v, w)
        if m is not None:
            H += g(m)
        m = omega.shift(w, v)
        if m is not None:
            Hs += g(m)
    return (Hs, H) if reverse else (H, Hs)


def hook_values(omega: TreeProductIdeal, g: ShiftWeight, reverse: bool = False) -> dict[Element, tuple]:
    """``{v: (H(v), H*(v))}`` for all elements, in one pass over ordered pairs."""
    H = {v: 0 for v in omega.elements}
    Hs = {v: 0 for v in omega.elements}
    for v in omega.elements:
        for w in omega.elements:
            m = omega.shift(v, w)
            if m is not None:
                weight = g(m)
                H[v] += weight
                Hs[w] += weight
    if reverse:
        H, Hs = Hs, H
    return {v: (H[v], Hs[v]) for v in omega}


def hook_multisets(omega: TreeProductIdeal, g: ShiftWeight, reverse: bool = False) -> tuple[Multiset, Multiset]:
    vals = hook_values(omega, g, reverse)
    return Multiset(h for h, _ in vals.values()), Multiset(hs for _, hs in vals.values())


def pair_weight_total(omega: TreeProductIdeal, g: ShiftWeight):
    """Total weight of all comparable ordered pairs, computed coordinate by coordinate.

    Independent of :func:`hook_values`: it walks each ``w`` up to its ancestors
    per factor instead of testing every pair, and must equal both ``sum(H)``
    and ``sum(H*)``.
    """
    from itertools import product

    total = 0
    for w in omega.elements:
        chains = []
        for t, c in zip(omega.factors, w):
            anc = []
            u = c
            while u:
                anc.append((u, t.depth[c] - t.depth[u]))
                u = t.parent[u - 1]
            chains.append(anc)
        for combo in product(*chains):
            v = tuple(u for u, _ in combo)
            if v in omega.elements:
                total += g(tuple(s for _, s in combo))
    return total


def shuffle_product(omega: TreeProductIdeal, X: Iterable) -> list[list[Element]]:
    """Shuffle ``X`` in the first factor, then the second, and so on.

    Within each factor the fibres (elements agreeing off that coordinate) are
    shuffled with the tree procedure.  Returns the trace ``[X, ..., Y]`` with
    one stage per factor; every stage is a subset of ``omega``.
    """
    X = sorted({_check(omega, v) for v in X})
    stages = [X]
    current = X
    for a, t in enumerate(omega.factors):
        fibres: dict[tuple, list[int]] = {}
        for v in current:
            fibres.setdefault(v[:a] + v[a + 1:], []).append(v[a])
        nxt = []
        for key, coords in fibres.items():
            for c in shuffle_tree(t, coords):
                nxt.append(key[:a] + (c,) + key[a:])
        for v in nxt:
            assert v in omega.elements, f"shuffle left the ideal at {v}"
        current = sorted(nxt)
        stages.append(current)
    return stages


@dataclass
class ProductShuffleReport:
    stages: list[list[Element]]
    anti_hook_sum_X: object
    hook_sum_Y: object

    @property
    def ok(self) -> bool:
        return len(self.stages[0]) == len(self.stages[-1]) and self.hook_sum_Y >= self.anti_hook_sum_X


def verify_product_shuffle(omega: TreeProductIdeal, g: ShiftWeight, X: Iterable, values=None) -> ProductShuffleReport:
    stages = shuffle_product(omega, X)
    vals = values if values is not None else hook_values(omega, g)
    return ProductShuffleReport(
        stages,
        sum(vals[v][1] for v in stages[0]),
        sum(vals[v][0] for v in stages[-1]),
    )


def parse_ideal(data: dict) -> tuple[TreeProductIdeal, ShiftWeight | None]:
    """Read ``{"factors": [...], "elements": [...], "weight": [...]}``.

    ``factors`` are parent arrays (lists or comma strings); ``weight`` is a list
    of ``[shift, value]`` pairs or a preset name and may be omitted.
    """
    if not isinstance(data, dict) or "factors" not in data or "elements" not in data:
        raise IdealError("ideal JSON needs 'factors' and 'elements'")
    factors = []
    for f in data["factors"]:
        if isinstance(f, str):
            f = [int(x) for x in f.split(",")]
        factors.append(RootedTree(tuple(f)))
    elems = [tuple(e) for e in data["elements"]]
    if len(set(elems)) != len(elems):
        raise IdealError("duplicate elements")
    omega = TreeProductIdeal(tuple(factors), frozenset(elems))
    w = data.get("weight")
    if w is None:
        return omega, None
    if isinstance(w, str):
        return omega, ShiftWeight.named(w)
    return omega, ShiftWeight.from_pairs(w)


def ideal_to_json(omega: TreeProductIdeal, g: ShiftWeight | None = None) -> dict:
    out = {
        "factors": [list(t.parent) for t in omega.factors],
        "elements": [list(v) for v in omega],
    }
    if g is not None:
        out["weight"] = g.describe()
    return out
