"""Young diagrams: per-cell statistics, SYT counting and plane shuffling.

All coordinates are 1-based matrix coordinates ``(i, j)``: ``i`` is the row
(growing downward) and ``j`` the column (growing rightward), with the corner
cell at ``(1, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod
from typing import Iterable, Sequence

from .major import Multiset
from .weights import ShiftWeight

Cell = tuple[int, int]

KINDS = (
    "hook",
    "anti-hook",
    "semi-hook",
    "arm",
    "leg",
    "anti-arm",
    "anti-leg",
    "area",
    "anti-area",
)


class CellError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()
    _conj: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for k, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"part {k + 1} is {p}; parts must be positive")
            if k and p > parts[k - 1]:
                raise ValueError(f"parts must be non-increasing: {parts[k - 1]} then {p}")
        object.__setattr__(self, "parts", parts)
        conj = tuple(sum(1 for p in parts if p >= j) for j in range(1, (parts[0] if parts else 0) + 1))
        object.__setattr__(self, "_conj", conj)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def row(self, i: int) -> int:
        """Length of row ``i`` (0 outside the diagram)."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col(self, j: int) -> int:
        """Length of column ``j`` (0 outside the diagram)."""
        return self._conj[j - 1] if 1 <= j <= len(self._conj) else 0

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def cells(self) -> list[Cell]:
        return [(i, j) for i, p in enumerate(self.parts, start=1) for j in range(1, p + 1)]


def conjugate(lam: Partition) -> Partition:
    return Partition(lam._conj)


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition(())
    parts = []
    pos = 0
    for token in text.split(","):
        stripped = token.strip()
        if not stripped.isdigit():
            raise ValueError(f"bad partition part {token!r} at position {pos}")
        parts.append(int(stripped))
        pos += len(token) + 1
    return Partition(tuple(parts))


def _check_cell(lam: Partition, i: int, j: int) -> None:
    if (i, j) not in lam:
        raise CellError(f"cell ({i},{j}) is outside the diagram of ({lam})")


def cell_stat(lam: Partition, kind: str, i: int, j: int) -> int:
    """Evaluate one of the per-cell statistics listed in :data:`KINDS`.

    ``anti-arm`` and ``anti-leg`` are ``j`` and ``i``, so
    ``anti-hook = anti-arm + anti-leg - 1`` while ``hook = arm + leg + 1``.
    ``semi-hook`` is ``anti-arm + leg = j + col(j) - i``.
    """
    _check_cell(lam, i, j)
    if kind == "hook":
        return lam.row(i) - i + lam.col(j) - j + 1
    if kind == "anti-hook":
        return i + j - 1
    if kind == "semi-hook":
        return j + lam.col(j) - i
    if kind == "arm":
        return lam.row(i) - j
    if kind == "leg":
        return lam.col(j) - i
    if kind == "anti-arm":
        return j
    if kind == "anti-leg":
        return i
    if kind == "area":
        return sum(lam.row(p) - j + 1 for p in range(i, lam.col(j) + 1))
    if kind == "anti-area":
        return i * j
    raise ValueError(f"unknown statistic {kind!r}; choose from {KINDS}")


def semi_hook_candidates(lam: Partition, i: int, j: int) -> dict[str, int]:
    """The semi-hook in use plus three nearby closed forms, for comparison.

    Summed over the middle stage of the plane shuffle, only ``"anti-arm+leg"``
    always lands between the anti-hook sum of ``X`` and the hook sum of ``Y``.
    None of these forms is bounded by the hook and anti-hook cell by cell.
    """
    _check_cell(lam, i, j)
    return {
        "anti-arm+leg": j + lam.col(j) - i,
        "i+col(j)-j": i + lam.col(j) - j,
        "anti-arm+leg-1": j + lam.col(j) - i - 1,
        "anti-arm+leg+1": j + lam.col(j) - i + 1,
    }


def stat_table(lam: Partition, kind: str) -> list[list[int]]:
    """Row-by-row table of a statistic, shaped like the diagram."""
    return [[cell_stat(lam, kind, i, j) for j in range(1, lam.row(i) + 1)] for i in range(1, len(lam) + 1)]


def stat_multiset(lam: Partition, kind: str) -> Multiset:
    return Multiset(cell_stat(lam, kind, i, j) for i, j in lam.cells())


def weighted_stats(lam: Partition, g: ShiftWeight) -> tuple[dict[Cell, object], dict[Cell, object]]:
    """Per-cell weighted hooks: ``g`` summed over the quadrant below-right
    (``psi``) and above-left (``psi*``) of each cell, restricted to the diagram."""
    cells = lam.cells()
    psi = {}
    psi_star = {}
    for i, j in cells:
        psi[(i, j)] = sum(
            g((p - i, q - j)) for p in range(i, lam.col(j) + 1) for q in range(j, lam.row(p) + 1)
        )
        psi_star[(i, j)] = sum(g((i - p, j - q)) for p in range(1, i + 1) for q in range(1, j + 1))
    return psi, psi_star


def weighted_stat_multisets(lam: Partition, g: ShiftWeight) -> tuple[Multiset, Multiset]:
    psi, psi_star = weighted_stats(lam, g)
    return Multiset(psi.values()), Multiset(psi_star.values())


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux via the hook-length formula."""
    n = lam.size
    hooks = prod(cell_stat(lam, "hook", i, j) for i, j in lam.cells())
    count, rem = divmod(factorial(n), hooks)
    assert rem == 0, f"hook product {hooks} does not divide {n}!"
    return count


def is_rectangle(lam: Partition) -> bool:
    return len(set(lam.parts)) <= 1


def _canon(cells: Iterable[Cell]) -> list[Cell]:
    return sorted(set(cells))


def _check_subset(lam: Partition, cells: Iterable[Cell]) -> list[Cell]:
    out = []
    for c in cells:
        c = (int(c[0]), int(c[1]))
        _check_cell(lam, *c)
        out.append(c)
    if len(set(out)) != len(out):
        raise ValueError("cell subset contains duplicates")
    return _canon(out)


def _push(cells: Sequence[Cell], axis: int) -> list[Cell]:
    # Compact cells toward coordinate 1 along `axis` within each line.
    lines: dict[tuple, int] = {}
    for c in cells:
        key = c[:axis] + c[axis + 1:]
        lines[key] = lines.get(key, 0) + 1
    out = []
    for key, count in lines.items():
        for t in range(1, count + 1):
            out.append(key[:axis] + (t,) + key[axis:])
    return _canon(out)


def shuffle_plane(lam: Partition, X: Iterable[Cell]) -> tuple[list[Cell], list[Cell]]:
    """Push ``X`` up inside each column, then left inside each row.

    Returns ``(X', Y)`` as sorted cell lists.
    """
    X = _check_subset(lam, X)
    X1 = _push(X, 0)
    Y = _push(X1, 1)
    return X1, Y


def _matched(src: Sequence[Cell], dst: Sequence[Cell], axis: int) -> list[tuple[Cell, Cell]]:
    # Pair each source cell with its pushed image: same line, same rank along `axis`.
    other = 1 - axis
    by_line_src: dict[int, list[Cell]] = {}
    by_line_dst: dict[int, list[Cell]] = {}
    for c in src:
        by_line_src.setdefault(c[other], []).append(c)
    for c in dst:
        by_line_dst.setdefault(c[other], []).append(c)
    pairs = []
    for key, cs in by_line_src.items():
        ds = sorted(by_line_dst[key], key=lambda c: c[axis])
        pairs.extend(zip(sorted(cs, key=lambda c: c[axis]), ds))
    return pairs


@dataclass
class StepReport:
    X: list[Cell]
    X1: list[Cell]
    Y: list[Cell]
    sums: dict[str, int]
    checks: dict[str, bool]
    semi_hook_alternatives: dict[str, int]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def verify_step_inequalities(lam: Partition, X: Iterable[Cell]) -> StepReport:
    """Run the plane shuffle on ``X`` and check every intermediate inequality.

    The per-cell arm/leg comparisons use the natural matching inside each
    line.  The leg and arm sum comparisons carry one unit per cell, because
    ``anti-leg = i`` counts the cell itself while ``leg`` does not.
    """
    X = _check_subset(lam, X)
    X1, Y = shuffle_plane(lam, X)
    k = len(X)

    def s(kind: str, cells: Sequence[Cell]) -> int:
        return sum(cell_stat(lam, kind, i, j) for i, j in cells)

    step1 = _matched(X, X1, 0)
    step2 = _matched(X1, Y, 1)
    sums = {
        "size": k,
        "anti-hook(X)": s("anti-hook", X),
        "semi-hook(X')": s("semi-hook", X1),
        "hook(Y)": s("hook", Y),
        "anti-leg(X)": s("anti-leg", X),
        "leg(X')": s("leg", X1),
        "anti-arm(X')": s("anti-arm", X1),
        "arm(Y)": s("arm", Y),
        "leg(Y)": s("leg", Y),
        "anti-arm(X)": s("anti-arm", X),
    }
    checks = {
        "step1-per-cell": all(
            cell_stat(lam, "arm", *b) >= cell_stat(lam, "arm", *a) and b[1] == a[1] for a, b in step1
        ),
        "step1-legs": sums["leg(X')"] + k >= sums["anti-leg(X)"],
        "step2-arms": sums["arm(Y)"] + k >= sums["anti-arm(X')"],
        "step2-per-cell": all(
            cell_stat(lam, "leg", *b) >= cell_stat(lam, "leg", *a) and b[0] == a[0] for a, b in step2
        ),
        "anti-arm-preserved": sums["anti-arm(X')"] == sums["anti-arm(X)"],
        "semi-hook-chain": sums["anti-hook(X)"] <= sums["semi-hook(X')"] <= sums["hook(Y)"],
        "step-hook": sums["hook(Y)"] >= sums["anti-hook(X)"],
    }
    alts = dict.fromkeys(("anti-arm+leg", "i+col(j)-j", "anti-arm+leg-1", "anti-arm+leg+1"), 0)
    for c in X1:
        for name, v in semi_hook_candidates(lam, *c).items():
            alts[name] += v
    return StepReport(X, X1, Y, sums, checks, alts)


def weighted_chain(lam: Partition, g: ShiftWeight, X: Iterable[Cell]) -> tuple[object, object, object]:
    """Weighted analogue of the semi-hook sandwich along the plane shuffle.

    Returns ``(psi*(X), psi_mixed(X'), psi(Y))``.  A shift ``(p, q)`` counts
    toward ``psi_mixed(i, j)`` when the rectangle ``{i, i+p} x {j-q, j}`` lies in
    the diagram, i.e. ``(i+p, j)`` is a cell and ``q < j``.  The chain is
    non-decreasing.
    """
    X = _check_subset(lam, X)
    X1, Y = shuffle_plane(lam, X)
    psi, psi_star = weighted_stats(lam, g)
    mixed = sum(g((p, q)) for i, j in X1 for p in range(lam.col(j) - i + 1) for q in range(j))
    return sum(psi_star[c] for c in X), mixed, sum(psi[c] for c in Y)
