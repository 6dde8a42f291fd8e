"""Exhaustive and randomized verification sweeps.

Each sweep pairs an instance stream with a check.  A check returns
``(ok, equality, detail)``; ``detail`` is a JSON-ready description used when the
instance turns out to be a counterexample.  Checks are module-level functions
so sweeps can fan out over a process pool.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

from . import posets, solid, trees, treeproduct, young
from .enumerate import (
    partitions_of,
    random_ideal,
    random_poset,
    random_tree,
    random_weight,
    rooted_trees,
    solid_partitions_of,
)
from .major import Multiset, Verdict, karamata_holds, majorizes
from .report import fmt
from .weights import ShiftWeight

Check = Callable[[object], tuple]


def _ms(m: Multiset) -> list[str]:
    return [fmt(v) for v in m]


def _maj(a: Multiset, b: Multiset) -> bool:
    return majorizes(a, b) is Verdict.MAJORIZES


# -- Young diagrams ---------------------------------------------------------


def _partitions_upto(n: int) -> Iterator[tuple[int, ...]]:
    for k in range(1, n + 1):
        for lam in partitions_of(k):
            yield lam.parts


def check_young_sum(parts):
    lam = young.Partition(parts)
    h = young.stat_multiset(lam, "hook")
    hs = young.stat_multiset(lam, "anti-hook")
    # Independent count: ordered pairs (x, y) with y weakly right in x's row or weakly below in its column.
    cells = lam.cells()
    pairs = sum(1 for x in cells for y in cells if (x[0] == y[0] and x[1] <= y[1]) or (x[1] == y[1] and x[0] < y[0]))
    ok = h.total == hs.total == pairs
    return ok, ok, {"partition": list(parts), "hook_sum": h.total, "anti_hook_sum": hs.total, "pair_count": pairs}


def check_young_hook(parts):
    lam = young.Partition(parts)
    h = young.stat_multiset(lam, "hook")
    hs = young.stat_multiset(lam, "anti-hook")
    maj = _maj(h, hs)
    equal = h == hs
    rect = young.is_rectangle(lam)
    prod_ok = karamata_holds(h, hs, "neg-log") if maj else False
    ok = maj and equal == rect and prod_ok and ((h.product() == hs.product()) == rect)
    return ok, equal, {
        "partition": list(parts),
        "hooks": _ms(h),
        "anti_hooks": _ms(hs),
        "majorizes": maj,
        "rectangle": rect,
        "hook_product": fmt(h.product()),
        "anti_hook_product": fmt(hs.product()),
    }


def check_young_area(parts):
    lam = young.Partition(parts)
    h = young.stat_multiset(lam, "hook")
    hs = young.stat_multiset(lam, "anti-hook")
    a = young.stat_multiset(lam, "area")
    a_s = young.stat_multiset(lam, "anti-area")
    sq = h.power_sum(2) >= hs.power_sum(2)
    maj = _maj(a, a_s)
    prod_ok = a.product() <= a_s.product()
    ok = sq and maj and prod_ok and (not maj or karamata_holds(a, a_s, "neg-log"))
    return ok, a == a_s, {
        "partition": list(parts),
        "hook_square_sum": h.power_sum(2),
        "anti_hook_square_sum": hs.power_sum(2),
        "areas": _ms(a),
        "anti_areas": _ms(a_s),
        "area_product": fmt(a.product()),
        "anti_area_product": fmt(a_s.product()),
    }


def check_young_weighted(inst):
    parts, seed, box = inst
    lam = young.Partition(parts)
    g = random_weight((box, box), seed)
    psi, psi_s = young.weighted_stat_multisets(lam, g)
    ok = _maj(psi, psi_s)
    return ok, psi == psi_s, {
        "partition": list(parts),
        "weight_seed": seed,
        "weight": g.describe(),
        "psi": _ms(psi),
        "psi_star": _ms(psi_s),
    }


def check_young_shuffle(parts):
    lam = young.Partition(parts)
    cells = lam.cells()
    n = len(cells)
    for mask in range(1 << n):
        X = [cells[t] for t in range(n) if mask >> t & 1]
        rep = young.verify_step_inequalities(lam, X)
        if not rep.ok:
            return False, False, {
                "partition": list(parts),
                "X": [list(c) for c in X],
                "X1": [list(c) for c in rep.X1],
                "Y": [list(c) for c in rep.Y],
                "checks": rep.checks,
                "sums": rep.sums,
            }
    return True, False, {"partition": list(parts), "subsets": 1 << n}


# -- Trees ------------------------------------------------------------------


def _trees_upto(n: int) -> Iterator[tuple[int, ...]]:
    for k in range(1, n + 1):
        for t in rooted_trees(k):
            yield t.parent


def check_tree_branch(parent):
    t = trees.RootedTree(parent)
    b = trees.branch_sizes(t)
    d = trees.distances(t)
    maj = _maj(b, d)
    equal = b == d
    path = trees.is_root_path(t)
    ok = (
        maj
        and b.total == d.total
        and equal == path
        and b.product() <= d.product()
        and (b.product() == d.product()) == path
        and b.power_sum(2) >= d.power_sum(2)
    )
    return ok, equal, {
        "tree": list(parent),
        "branches": _ms(b),
        "distances": _ms(d),
        "root_path": path,
        "branch_product": fmt(b.product()),
        "distance_product": fmt(d.product()),
    }


def check_tree_shuffle(parent):
    t = trees.RootedTree(parent)
    verts = list(t.vertices())
    for r in range(len(verts) + 1):
        for X in combinations(verts, r):
            rep = trees.verify_tree_shuffle(t, X)
            if not rep.ok:
                return False, False, {"tree": list(parent), "X": rep.X, "Y": rep.Y,
                                      "distance_sum_X": rep.distance_sum_X, "branch_sum_Y": rep.branch_sum_Y}
    return True, False, {"tree": list(parent)}


# -- Posets -----------------------------------------------------------------


def _poset_instances(max_tree: int, max_young: int, max_solid: int, trials: int, seed: int):
    for p in _trees_upto(max_tree):
        yield ("tree", p)
    for p in _partitions_upto(max_young):
        yield ("young", p)
    for cubes in _solids_upto(max_solid):
        yield ("solid", cubes)
    for t in range(trials):
        yield ("random", (seed, t))


def _random_poset_args(seed: int, t: int) -> tuple[int, float, int]:
    rng = random.Random(seed * 1_000_003 + t)
    return rng.randrange(1, 10), rng.random(), rng.randrange(1 << 30)


def check_poset_hp(inst):
    kind, data = inst
    if kind == "tree":
        P = posets.tree_poset(trees.RootedTree(data))
    elif kind == "young":
        P = posets.young_poset(young.Partition(data))
    elif kind == "solid":
        P = posets.solid_poset(data)
    else:
        n, density, s = _random_poset_args(*data)
        P = random_poset(n, density, s)
        data = {"n": n, "density": density, "seed": s, "relations": [list(r) for r in P.relations]}
    exact = posets.le_count(P)
    bound = posets.hp_bound(P)
    ok = exact >= bound
    if kind == "tree":
        ok = ok and exact == bound
    return ok, exact == bound, {"kind": kind, "instance": data if kind == "random" else [list(x) if isinstance(x, tuple) else x for x in data],
                                "le_count": fmt(exact), "hp_bound": fmt(bound)}


# -- Solid partitions -------------------------------------------------------


def _solids_upto(n: int):
    for k in range(1, n + 1):
        for s in solid_partitions_of(k):
            yield tuple(sorted(s.cubes))


def check_solid_hooks(cubes):
    lam = solid.SolidPartition(frozenset(cubes))
    detail = {"cubes": [list(c) for c in cubes]}
    ok = True
    equal = True
    for kind, free in (("R", 1), ("Q", 2), ("V", 3)):
        plain, star = solid.stat_multisets(lam, kind)
        pairs = solid.comparable_pairs(lam, free)
        maj = _maj(plain, star)
        good = maj and plain.total == star.total == pairs and plain.product() <= star.product()
        ok = ok and good
        equal = equal and plain == star
        detail[kind] = {"plain": _ms(plain), "star": _ms(star), "pairs": pairs, "majorizes": maj}
    return ok, equal, detail


def check_solid_bounds(cubes):
    lam = solid.SolidPartition(frozenset(cubes))
    bp = solid.le_bound_pair(lam)
    ok = bp.exact is not None and bp.ordered
    return ok, bp.bound_v == bp.bound_vstar, {
        "cubes": [list(c) for c in cubes],
        "exact": fmt(bp.exact) if bp.exact is not None else None,
        "bound_V": fmt(bp.bound_v),
        "bound_Vstar": fmt(bp.bound_vstar),
    }


def check_solid_shuffle(cubes):
    lam = solid.SolidPartition(frozenset(cubes))
    cl = list(lam)
    for mask in range(1 << len(cl)):
        X = [cl[t] for t in range(len(cl)) if mask >> t & 1]
        tr = solid.shuffle_space(lam, X)
        if not tr.ok:
            return False, False, {"cubes": [list(c) for c in cubes], "stages": tr.stages, "sums": tr.sums}
    return True, False, {"cubes": [list(c) for c in cubes]}


# -- Products of trees ------------------------------------------------------


def make_product_trial(seed: int, t: int):
    rng = random.Random(seed * 1_000_003 + t)
    factors = [random_tree(rng.randrange(1, 6), rng) for _ in range(2)]
    cap = min(12, factors[0].n * factors[1].n)
    omega = treeproduct.TreeProductIdeal(
        tuple(factors), random_ideal(factors, rng.randrange(1, cap + 1), rng.randrange(1 << 30))
    )
    g = random_weight((3, 3), rng.randrange(1 << 30), max_value=2)
    return omega, g, rng


def check_tree_product(inst):
    seed, t = inst
    omega, g, rng = make_product_trial(seed, t)
    vals = treeproduct.hook_values(omega, g)
    H = Multiset(h for h, _ in vals.values())
    Hs = Multiset(hs for _, hs in vals.values())
    total = treeproduct.pair_weight_total(omega, g)
    ok = _maj(H, Hs) and H.total == Hs.total == total
    # Shuffle soundness: every subset when small, a sample otherwise.
    els = list(omega)
    if len(els) <= 10:
        subsets = (X for r in range(len(els) + 1) for X in combinations(els, r))
    else:
        subsets = (rng.sample(els, rng.randrange(len(els) + 1)) for _ in range(256))
    bad_shuffle = None
    for X in subsets:
        rep = treeproduct.verify_product_shuffle(omega, g, X, vals)
        if not rep.ok:
            bad_shuffle = {"X": [list(v) for v in rep.stages[0]], "Y": [list(v) for v in rep.stages[-1]]}
            break
    ok = ok and bad_shuffle is None
    detail = treeproduct.ideal_to_json(omega, g)
    detail.update({"trial": t, "H": _ms(H), "H_star": _ms(Hs), "pair_total": fmt(total), "shuffle_failure": bad_shuffle})
    return ok, H == Hs, detail


def check_specialization(inst):
    """Exact identities between the product-of-trees statistics and the
    dedicated Young / tree / solid modules, including shuffle traces."""
    kind, data = inst
    detail = {"kind": kind, "instance": [list(x) if isinstance(x, tuple) else x for x in data]}
    if kind == "young":
        lam = young.Partition(data)
        omega = treeproduct.chain_product(lam.cells(), 2)
        ok = True
        for preset, plain, star in (("axes", "hook", "anti-hook"), ("ones", "area", "anti-area")):
            vals = treeproduct.hook_values(omega, ShiftWeight.named(preset))
            for c in lam.cells():
                if vals[c] != (young.cell_stat(lam, plain, *c), young.cell_stat(lam, star, *c)):
                    ok = False
        psi, psi_s = young.weighted_stats(lam, ShiftWeight.named("axes"))
        ok = ok and all(psi[c] == young.cell_stat(lam, "hook", *c) and psi_s[c] == young.cell_stat(lam, "anti-hook", *c) for c in lam.cells())
        cells = lam.cells()
        if len(cells) <= 8:
            for mask in range(1 << len(cells)):
                X = [cells[t] for t in range(len(cells)) if mask >> t & 1]
                if treeproduct.shuffle_product(omega, X)[1:] != list(young.shuffle_plane(lam, X)):
                    ok = False
                    break
        return ok, True, detail
    if kind == "tree":
        t = trees.RootedTree(data)
        omega = treeproduct.single_tree(t)
        vals = treeproduct.hook_values(omega, ShiftWeight.named("ones"))
        ok = all(vals[(v,)] == (t.branch[v], t.depth[v]) for v in t.vertices())
        for r in range(t.n + 1):
            for X in combinations(t.vertices(), r):
                Y = treeproduct.shuffle_product(omega, [(v,) for v in X])[-1]
                if [v for (v,) in Y] != trees.shuffle_tree(t, X):
                    ok = False
        return ok, True, detail
    lam = solid.SolidPartition(frozenset(data))
    omega = treeproduct.chain_product(list(lam), 3)
    ok = True
    for preset, kind3 in (("axes", "R"), ("planes", "Q"), ("ones", "V")):
        vals = treeproduct.hook_values(omega, ShiftWeight.named(preset))
        plain, starred = solid._STATS[kind3]
        if any(vals[c] != (plain(lam, *c), starred(lam, *c)) for c in lam):
            ok = False
    return ok, True, detail


def _specialization_instances(max_young: int, max_tree: int, max_solid: int):
    for p in _partitions_upto(max_young):
        yield ("young", p)
    for p in _trees_upto(max_tree):
        yield ("tree", p)
    for c in _solids_upto(max_solid):
        yield ("solid", c)


# -- Oracle equivalences ----------------------------------------------------


def check_oracle(inst):
    kind, data = inst
    if kind == "young":
        lam = young.Partition(data)
        formula = young.syt_count(lam)
        exact = posets.le_count(posets.young_poset(lam))
    else:
        t = trees.RootedTree(data)
        formula = trees.it_count(t)
        exact = posets.le_count(posets.tree_poset(t))
    return formula == exact, True, {"kind": kind, "instance": list(data), "formula": fmt(formula), "le_count": fmt(exact)}


def _oracle_instances(max_young: int, max_tree: int):
    for p in _partitions_upto(max_young):
        yield ("young", p)
    for p in _trees_upto(max_tree):
        yield ("tree", p)


# -- Registry ---------------------------------------------------------------


@dataclass(frozen=True)
class Theorem:
    id: str
    title: str
    default_max_n: int | None
    default_trials: int | None
    instances: Callable[[int | None, int | None, int], Iterable]
    check: Check


THEOREMS: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem("young-sum", "sum of hooks equals sum of anti-hooks", 18, None,
                lambda n, tr, s: _partitions_upto(n), check_young_sum),
        Theorem("young-hook", "hooks majorize anti-hooks; equality exactly on rectangles", 14, None,
                lambda n, tr, s: _partitions_upto(n), check_young_hook),
        Theorem("young-area", "square sums, area majorization and area products", 14, None,
                lambda n, tr, s: _partitions_upto(n), check_young_area),
        Theorem("young-weighted", "weighted hooks psi majorize psi* for random weights", 12, 50,
                lambda n, tr, s: ((p, s * 1_000_003 + t, n) for p in _partitions_upto(n) for t in range(tr)),
                check_young_weighted),
        Theorem("young-shuffle", "plane shuffling step inequalities on every subset", 10, None,
                lambda n, tr, s: _partitions_upto(n), check_young_shuffle),
        Theorem("tree-branch", "branch sizes majorize distances; equality exactly on root paths", 9, None,
                lambda n, tr, s: _trees_upto(n), check_tree_branch),
        Theorem("tree-shuffle", "tree shuffling on every vertex subset", 7, None,
                lambda n, tr, s: _trees_upto(n), check_tree_shuffle),
        Theorem("poset-hp", "linear extensions dominate the upper-ideal bound", 8, 500,
                lambda n, tr, s: _poset_instances(n, n + 1, n, tr, s), check_poset_hp),
        Theorem("solid-hooks", "R, Q and V hooks majorize their anti-hooks", 9, None,
                lambda n, tr, s: _solids_upto(n), check_solid_hooks),
        Theorem("solid-bounds", "exact >= n!/prod V >= n!/prod V*", 8, None,
                lambda n, tr, s: _solids_upto(n), check_solid_bounds),
        Theorem("solid-shuffle", "space shuffling hook chain on every subset", 7, None,
                lambda n, tr, s: _solids_upto(n), check_solid_shuffle),
        Theorem("tree-product", "H majorizes H* on random ideals in products of two trees", None, 200,
                lambda n, tr, s: ((s, t) for t in range(tr)), check_tree_product),
        Theorem("specializations", "product-of-trees statistics reproduce young/trees/solid", 9, None,
                lambda n, tr, s: _specialization_instances(n, min(n, 7), min(n, 6)), check_specialization),
        Theorem("oracles", "hook-length and tree formulas equal linear-extension counts", 9, None,
                lambda n, tr, s: _oracle_instances(n, n - 1), check_oracle),
    ]
}


@dataclass
class SweepResult:
    theorem: str
    params: dict
    instances: int = 0
    failures: int = 0
    equality_cases: int = 0
    first_counterexample: dict | None = None
    elapsed: float = 0.0
    equality_instances: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.instances > 0

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "instances": self.instances,
            "failures": self.failures,
            "equality_cases": self.equality_cases,
            "counterexample": self.first_counterexample,
            "elapsed_s": round(self.elapsed, 3),
        }


def run_sweep(
    theorem_id: str,
    max_n: int | None = None,
    trials: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    stop_on_failure: bool = False,
    keep_equalities: int = 0,
) -> SweepResult:
    """Run one registered sweep and aggregate its results."""
    th = THEOREMS[theorem_id]
    n = th.default_max_n if max_n is None else max_n
    tr = th.default_trials if trials is None else trials
    params = {"max_n": n, "trials": tr, "seed": seed}
    result = SweepResult(theorem_id, params)
    start = time.perf_counter()
    stream = th.instances(n, tr, seed)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = pool.map(th.check, stream, chunksize=8)
            _collect(result, outcomes, stop_on_failure, keep_equalities)
    else:
        _collect(result, map(th.check, stream), stop_on_failure, keep_equalities)
    result.elapsed = time.perf_counter() - start
    return result


def _collect(result: SweepResult, outcomes, stop_on_failure: bool, keep_equalities: int) -> None:
    for ok, equality, detail in outcomes:
        result.instances += 1
        if equality:
            result.equality_cases += 1
            if len(result.equality_instances) < keep_equalities:
                result.equality_instances.append(detail)
        if not ok:
            result.failures += 1
            if result.first_counterexample is None:
                result.first_counterexample = detail
            if stop_on_failure:
                break
