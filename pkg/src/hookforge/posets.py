"""Finite posets, exact linear-extension counts and the upper-ideal lower bound."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Callable, Hashable, Iterable, Sequence

from .major import Multiset

DEFAULT_LIMIT = 20


class LimitExceeded(ValueError):
    pass


def le_limit() -> int:
    """Size limit for exact counting; ``HOOKFORGE_LIMIT`` overrides the default."""
    raw = os.environ.get("HOOKFORGE_LIMIT")
    return int(raw) if raw else DEFAULT_LIMIT


@dataclass(frozen=True)
class FinitePoset:
    """Poset on ``1..n`` generated by relations ``a < b``.

    ``relations`` may contain any acyclic set of pairs; the order is its
    transitive closure.  ``labels`` optionally names the elements.
    """

    n: int
    relations: tuple[tuple[int, int], ...] = ()
    labels: tuple[Hashable, ...] | None = None
    above: tuple[int, ...] = field(init=False, repr=False, compare=False)
    below: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise ValueError("negative poset size")
        rels = tuple(sorted({(int(a), int(b)) for a, b in self.relations}))
        succ = [0] * (n + 1)
        for a, b in rels:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"relation {a} < {b} mentions an element outside 1..{n}")
            if a == b:
                raise ValueError(f"reflexive relation {a} < {a}")
            succ[a] |= 1 << b
        # Transitive closure, processing in reverse topological order.
        above = [0] * (n + 1)
        state = [0] * (n + 1)  # 0 new, 1 on stack, 2 done

        def visit(v: int) -> int:
            if state[v] == 2:
                return above[v]
            if state[v] == 1:
                raise ValueError(f"relations contain a cycle through {v}")
            state[v] = 1
            acc = 0
            m = succ[v]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                acc |= low | visit(w)
                m ^= low
            above[v] = acc
            state[v] = 2
            return acc

        for v in range(1, n + 1):
            visit(v)
        below = [0] * (n + 1)
        for v in range(1, n + 1):
            m = above[v]
            while m:
                low = m & -m
                below[low.bit_length() - 1] |= 1 << v
                m ^= low
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "above", tuple(above))
        object.__setattr__(self, "below", tuple(below))
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must name every element")

    @classmethod
    def from_order(cls, elements: Sequence[Hashable], less: Callable[[Hashable, Hashable], bool]) -> "FinitePoset":
        """Build from arbitrary elements and a strict order predicate."""
        elements = list(elements)
        rels = [
            (a + 1, b + 1)
            for a, x in enumerate(elements)
            for b, y in enumerate(elements)
            if a != b and less(x, y)
        ]
        return cls(len(elements), tuple(rels), tuple(elements))

    def leq(self, a: int, b: int) -> bool:
        return a == b or bool(self.above[a] >> b & 1)

    def covers(self) -> list[tuple[int, int]]:
        """The cover relation (transitive reduction)."""
        out = []
        for a in range(1, self.n + 1):
            up = self.above[a]
            for b in range(1, self.n + 1):
                if up >> b & 1 and not any(up >> c & 1 and self.above[c] >> b & 1 for c in range(1, self.n + 1)):
                    out.append((a, b))
        return out


def chain(n: int) -> FinitePoset:
    return FinitePoset(n, tuple((k, k + 1) for k in range(1, n)))


def antichain(n: int) -> FinitePoset:
    return FinitePoset(n)


def le_count(P: FinitePoset, limit: int | None = None) -> int:
    """Exact number of linear extensions.

    Memoized over downsets (encoded as bitmasks of placed elements); each
    step places one minimal element of the remainder.
    """
    limit = le_limit() if limit is None else limit
    n = P.n
    if n > limit:
        raise LimitExceeded(f"poset has {n} elements, above the counting limit {limit}")
    full = ((1 << (n + 1)) - 1) ^ 1
    below = P.below
    memo: dict[int, int] = {full: 1}

    def count(placed: int) -> int:
        got = memo.get(placed)
        if got is not None:
            return got
        total = 0
        for v in range(1, n + 1):
            bit = 1 << v
            if not placed & bit and below[v] & ~placed == 0:
                total += count(placed | bit)
        memo[placed] = total
        return total

    return count(0)


def upper_ideal_sizes(P: FinitePoset) -> Multiset:
    return Multiset(bin(P.above[v]).count("1") + 1 for v in range(1, P.n + 1))


def hp_bound(P: FinitePoset) -> Fraction:
    """``n! / prod(|{y >= x}|)``, a lower bound on the number of linear extensions."""
    return Fraction(factorial(P.n), prod(upper_ideal_sizes(P)))


def parse_poset(text: str) -> FinitePoset:
    """Read the text format: first line ``n``, then one ``a < b`` per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty poset file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"line 1: expected element count, got {lines[0]!r}") from None
    rels = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split("<")
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'a < b', got {ln!r}")
        try:
            rels.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers in {ln!r}") from None
    return FinitePoset(n, tuple(rels))


def format_poset(P: FinitePoset) -> str:
    return "\n".join([str(P.n)] + [f"{a} < {b}" for a, b in P.covers()]) + "\n"


def young_poset(lam) -> FinitePoset:
    """Cells of a Young diagram under the componentwise order."""
    cells = lam.cells()
    return FinitePoset.from_order(cells, lambda u, v: u != v and u[0] <= v[0] and u[1] <= v[1])


def tree_poset(tree) -> FinitePoset:
    """Vertices of a rooted tree ordered away from the root."""
    verts = list(tree.vertices())
    return FinitePoset(tree.n, tuple((tree.parent[v - 1], v) for v in verts if tree.parent[v - 1]), tuple(verts))


def solid_poset(cubes: Iterable[tuple[int, ...]]) -> FinitePoset:
    cubes = sorted(cubes)
    return FinitePoset.from_order(cubes, lambda u, v: u != v and all(a <= b for a, b in zip(u, v)))
