"""Multisets, majorization and Karamata-style consequence checks.

Everything here is exact: values are ``int`` or ``fractions.Fraction`` and no
comparison uses a tolerance.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from itertools import accumulate, combinations
from math import prod
from typing import Iterable, Union

Number = Union[int, Fraction]


class PreconditionError(ValueError):
    """Raised when a check is asked outside the hypothesis it relies on."""


class Multiset:
    """An immutable multiset of nonnegative exact numbers.

    Values are stored sorted in non-increasing order, so two multisets are
    equal exactly when their sorted sequences agree.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[Number] = ()):
        vals = []
        for v in values:
            if isinstance(v, float):
                raise TypeError(f"floating point value {v!r} not allowed; use int or Fraction")
            if v < 0:
                raise ValueError(f"multiset values must be nonnegative, got {v}")
            vals.append(v)
        vals.sort(reverse=True)
        self.values: tuple[Number, ...] = tuple(vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Multiset):
            return self.values == other.values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Multiset({list(self.values)!r})"

    @property
    def total(self) -> Number:
        return sum(self.values)

    def prefix_sums(self) -> list[Number]:
        return list(accumulate(self.values))

    def product(self) -> Number:
        return prod(self.values)

    def power_sum(self, k: int) -> Number:
        return sum(v**k for v in self.values)


def as_multiset(values: Union[Multiset, Iterable[Number]]) -> Multiset:
    return values if isinstance(values, Multiset) else Multiset(values)


class Verdict(str, enum.Enum):
    MAJORIZES = "majorizes"
    EQUAL_TOTAL_BUT_FAILS = "equal-total-but-fails"
    TOTALS_DIFFER = "totals-differ"


def majorizes(a, b) -> Verdict:
    """Classify whether ``a`` majorizes ``b``.

    ``TOTALS_DIFFER`` covers both a size mismatch and unequal sums.
    """
    a, b = as_multiset(a), as_multiset(b)
    if len(a) != len(b) or a.total != b.total:
        return Verdict.TOTALS_DIFFER
    for pa, pb in zip(a.prefix_sums(), b.prefix_sums()):
        if pa < pb:
            return Verdict.EQUAL_TOTAL_BUT_FAILS
    return Verdict.MAJORIZES


def first_failing_prefix(a, b) -> int | None:
    """Return the 1-based prefix length where ``a`` first falls behind ``b``."""
    a, b = as_multiset(a), as_multiset(b)
    for k, (pa, pb) in enumerate(zip(a.prefix_sums(), b.prefix_sums()), start=1):
        if pa < pb:
            return k
    return None


# Convex function identifiers: "square", "neg-log", or ("power", k) with k >= 2.
ConvexFunctionId = Union[str, tuple]


def _power_of(phi: ConvexFunctionId) -> int | None:
    if phi == "square":
        return 2
    if isinstance(phi, tuple) and len(phi) == 2 and phi[0] == "power":
        k = phi[1]
        if not isinstance(k, int) or k < 2:
            raise ValueError(f"custom power must be an integer >= 2, got {k!r}")
        return k
    if isinstance(phi, str) and phi.startswith("power:"):
        return _power_of(("power", int(phi.split(":", 1)[1])))
    return None


def convex_sums(a, b, phi: ConvexFunctionId) -> tuple[Number, Number]:
    """Return the pair of quantities compared by :func:`karamata_holds`.

    For power functions these are the power sums.  For ``neg-log`` they are
    the products, since ``sum(-log a) >= sum(-log b)`` iff ``prod(a) <= prod(b)``;
    note the comparison direction flips for this case.
    """
    a, b = as_multiset(a), as_multiset(b)
    k = _power_of(phi)
    if k is not None:
        return a.power_sum(k), b.power_sum(k)
    if phi == "neg-log":
        if any(v == 0 for v in a) or any(v == 0 for v in b):
            raise PreconditionError("neg-log requires strictly positive values")
        return a.product(), b.product()
    raise ValueError(f"unknown convex function {phi!r}")


def karamata_holds(a, b, phi: ConvexFunctionId) -> bool:
    """Check ``sum(phi(a_i)) >= sum(phi(b_i))`` given that ``a`` majorizes ``b``."""
    a, b = as_multiset(a), as_multiset(b)
    if majorizes(a, b) is not Verdict.MAJORIZES:
        raise PreconditionError("karamata_holds needs a to majorize b")
    lhs, rhs = convex_sums(a, b, phi)
    if phi == "neg-log":
        return lhs <= rhs
    return lhs >= rhs


def subset_condition_verify(a, b, max_size: int = 12) -> bool:
    """Sufficient condition for majorization, checked by brute force over subsets.

    For every sub-multiset ``B'`` of ``b`` there must be some ``A'`` of ``a``
    with the same size and at least the same sum.  Both sides are enumerated
    literally (by index combinations); nothing is sorted.
    """
    a, b = as_multiset(a), as_multiset(b)
    n = len(a)
    if len(b) != n:
        raise ValueError(f"size mismatch: {n} vs {len(b)}")
    if n > max_size:
        raise ValueError(f"n={n} exceeds max_size={max_size} for the exhaustive check")
    av, bv = list(a.values), list(b.values)
    for k in range(n + 1):
        best_a = max(sum(c) for c in combinations(av, k))
        for sub in combinations(bv, k):
            if sum(sub) > best_a:
                return False
    return True
