"""Command-line interface: ``hookforge {stats,count,verify,shuffle,bounds}``.

Exit status is 0 on success, 1 when a counterexample is found and 2 on bad
input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import posets, solid, trees, treeproduct, young
from .major import Verdict, majorizes
from .report import Report, fmt
from .verify import THEOREMS, run_sweep
from .weights import PRESETS, ShiftWeight

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2

PAIRS = {
    "hook": "anti-hook",
    "anti-hook": "hook",
    "area": "anti-area",
    "anti-area": "area",
    "arm": "anti-arm",
    "leg": "anti-leg",
    "anti-arm": "arm",
    "anti-leg": "leg",
}


class InputError(Exception):
    pass


def _load_json_arg(value: str):
    """A flag value that is either a path to a JSON file or inline JSON."""
    if os.path.isfile(value):
        with open(value) as fh:
            text = fh.read()
    else:
        text = value
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _load_weight(value: str | None, dims: int) -> ShiftWeight:
    if value is None:
        return ShiftWeight.named("axes")
    if value in PRESETS:
        return ShiftWeight.named(value)
    data = _load_json_arg(value)
    if isinstance(data, dict) and "weight" in data:
        data = data["weight"]
    if isinstance(data, str):
        return ShiftWeight.named(data)
    w = ShiftWeight.from_pairs(data)
    for m in w.table:
        if len(m) != dims:
            raise InputError(f"weight shift {list(m)} has {len(m)} coordinates, expected {dims}")
    return w


def _object(args) -> tuple[str, object]:
    given = [f for f in ("partition", "tree", "solid", "poset", "ideal") if getattr(args, f, None) is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --partition, --tree, --solid, --poset, --ideal")
    which = given[0]
    value = getattr(args, which)
    if which == "partition":
        return which, young.parse_partition(value)
    if which == "tree":
        return which, trees.parse_tree(value)
    if which == "solid":
        return which, solid.parse_solid(_load_json_arg(value))
    if which == "poset":
        if not os.path.isfile(value):
            raise InputError(f"poset file {value!r} not found")
        with open(value) as fh:
            return which, posets.parse_poset(fh.read())
    omega, g = treeproduct.parse_ideal(_load_json_arg(value))
    if args.weight is not None or g is None:
        g = _load_weight(args.weight, omega.dim)
    return which, (omega, g)


def _describe(which: str, obj) -> dict:
    if which == "partition":
        return {"partition": list(obj.parts)}
    if which == "tree":
        return {"tree": list(obj.parent)}
    if which == "solid":
        return {"solid": [list(c) for c in obj]}
    if which == "poset":
        return {"poset": {"n": obj.n, "relations": [list(r) for r in obj.covers()]}}
    omega, g = obj
    return {"ideal": treeproduct.ideal_to_json(omega, g)}


def _pair_verdict(report: Report, plain, star, names: tuple[str, str]) -> None:
    report.add_multiset(names[0], plain)
    report.add_multiset(names[1], star)
    report.verdicts["majorizes"] = majorizes(plain, star).value
    report.verdicts["product_le"] = plain.product() <= star.product()
    report.counterexample = majorizes(plain, star) is not Verdict.MAJORIZES


def cmd_stats(args) -> Report:
    which, obj = _object(args)
    report = Report("stats", _describe(which, obj))
    kind = args.kind
    if which == "partition":
        kind = kind or "hook"
        if kind == "weighted":
            g = _load_weight(args.weight, 2)
            psi, psi_s = young.weighted_stats(obj, g)
            report.kind = "weighted"
            report.extra["weight"] = g.describe()
            report.extra["table"] = [[list(c), fmt(psi[c]), fmt(psi_s[c])] for c in obj.cells()]
            from .major import Multiset

            _pair_verdict(report, Multiset(psi.values()), Multiset(psi_s.values()), ("psi", "psi*"))
            return report
        if kind not in young.KINDS:
            raise InputError(f"unknown partition statistic {kind!r}; choose from {young.KINDS + ('weighted',)}")
        report.kind = kind
        report.extra["table"] = young.stat_table(obj, kind)
        report.add_multiset(kind, young.stat_multiset(obj, kind))
        partner = PAIRS.get(kind)
        if partner:
            report.add_multiset(partner, young.stat_multiset(obj, partner))
            if kind in ("hook", "area"):
                v = majorizes(young.stat_multiset(obj, kind), young.stat_multiset(obj, partner))
                report.verdicts["majorizes"] = v.value
                report.counterexample = v is not Verdict.MAJORIZES
        report.verdicts["rectangle"] = young.is_rectangle(obj)
        return report
    if which == "tree":
        kind = kind or "branch"
        if kind not in ("branch", "distance"):
            raise InputError("tree statistics are 'branch' and 'distance'")
        report.kind = kind
        report.extra["table"] = [[v, obj.branch[v], obj.depth[v]] for v in obj.vertices()]
        _pair_verdict(report, trees.branch_sizes(obj), trees.distances(obj), ("branch", "distance"))
        if kind == "distance":
            report.multisets = dict(reversed(list(report.multisets.items())))
        report.verdicts["root_path"] = trees.is_root_path(obj)
        return report
    if which == "solid":
        kind = (kind or "R").upper()
        if kind not in solid.KINDS:
            raise InputError(f"solid statistics are {solid.KINDS}")
        report.kind = kind
        report.extra["table"] = [[list(c), p, s] for c, p, s in solid.stat_table(obj, kind)]
        plain, star = solid.stat_multisets(obj, kind)
        _pair_verdict(report, plain, star, (kind, kind + "*"))
        return report
    if which == "poset":
        report.kind = "upper-ideal"
        report.add_multiset("upper-ideal", posets.upper_ideal_sizes(obj))
        return report
    omega, g = obj
    report.kind = "H"
    vals = treeproduct.hook_values(omega, g)
    report.extra["table"] = [[list(v), fmt(h), fmt(hs)] for v, (h, hs) in vals.items()]
    H, Hs = treeproduct.hook_multisets(omega, g)
    _pair_verdict(report, H, Hs, ("H", "H*"))
    return report


def cmd_count(args) -> Report:
    which, obj = _object(args)
    report = Report("count", _describe(which, obj))
    limit = posets.le_limit()
    formula = brute = None
    if which == "partition":
        report.kind = "syt"
        formula = young.syt_count(obj)
        P = posets.young_poset(obj)
    elif which == "tree":
        report.kind = "increasing-trees"
        formula = trees.it_count(obj)
        P = posets.tree_poset(obj)
    elif which == "solid":
        report.kind = "linear-extensions"
        P = posets.solid_poset(obj.cubes)
    elif which == "poset":
        report.kind = "linear-extensions"
        P = obj
    else:
        raise InputError("count supports --partition, --tree, --solid and --poset")
    if P.n <= limit:
        brute = posets.le_count(P, limit)
    elif formula is None:
        raise posets.LimitExceeded(f"{P.n} elements exceeds the counting limit {limit} (set HOOKFORGE_LIMIT)")
    count = formula if formula is not None else brute
    report.extra["count"] = fmt(count)
    report.extra["formula"] = fmt(formula) if formula is not None else None
    report.extra["le_count"] = fmt(brute) if brute is not None else None
    report.extra["hp_bound"] = fmt(posets.hp_bound(P))
    if formula is not None and brute is not None:
        report.verdicts["formula_matches_le_count"] = formula == brute
        report.counterexample = formula != brute
    return report


def _subset(args, which: str, obj):
    if args.subset is None:
        raise InputError("--subset is required")
    data = _load_json_arg(args.subset)
    if not isinstance(data, list):
        raise InputError("--subset must be a JSON array")
    if which == "tree":
        return [int(v[0]) if isinstance(v, list) else int(v) for v in data]
    return [tuple(v) for v in data]


def cmd_shuffle(args) -> Report:
    which, obj = _object(args)
    X = _subset(args, which, obj)
    report = Report("shuffle", _describe(which, obj))
    report.extra["subset"] = [list(v) if isinstance(v, tuple) else v for v in X]
    if which == "partition":
        rep = young.verify_step_inequalities(obj, X)
        report.kind = "plane"
        report.extra["trace"] = [[list(c) for c in st] for st in (rep.X, rep.X1, rep.Y)]
        report.sums = {k: fmt(v) for k, v in rep.sums.items()}
        report.verdicts = dict(rep.checks)
        report.extra["semi_hook_alternatives"] = rep.semi_hook_alternatives
        ok = rep.ok
    elif which == "tree":
        rep = trees.verify_tree_shuffle(obj, X)
        report.kind = "tree"
        report.extra["trace"] = [rep.X, rep.Y]
        report.sums = {
            "distance(X)": fmt(rep.distance_sum_X),
            "branch(Y)": fmt(rep.branch_sum_Y),
            "branch(X)": fmt(rep.branch_sum_X),
            "distance(Y)": fmt(rep.distance_sum_Y),
        }
        report.verdicts["chain"] = rep.ok
        ok = rep.ok
    elif which == "solid":
        tr = solid.shuffle_space(obj, X)
        report.kind = "space"
        report.extra["trace"] = [[list(c) for c in st] for st in tr.stages]
        report.sums = dict(zip(("R*(X)", "R°(X')", "R°°(X'')", "R(Y)"), map(fmt, tr.sums)))
        report.verdicts["chain"] = tr.ok
        ok = tr.ok
    elif which == "ideal":
        omega, g = obj
        rep = treeproduct.verify_product_shuffle(omega, g, X)
        report.kind = "product"
        report.extra["trace"] = [[list(v) for v in st] for st in rep.stages]
        report.sums = {"H*(X)": fmt(rep.anti_hook_sum_X), "H(Y)": fmt(rep.hook_sum_Y)}
        report.verdicts["chain"] = rep.ok
        ok = rep.ok
    else:
        raise InputError("shuffle supports --partition, --tree, --solid and --ideal")
    report.counterexample = not ok
    return report


def cmd_bounds(args) -> Report:
    if args.solid is None:
        raise InputError("bounds needs --solid")
    lam = solid.parse_solid(_load_json_arg(args.solid))
    bp = solid.le_bound_pair(lam)
    report = Report("bounds", {"solid": [list(c) for c in lam]}, kind="V")
    report.extra = {
        "exact": fmt(bp.exact) if bp.exact is not None else "unavailable",
        "bound_V": fmt(bp.bound_v),
        "bound_Vstar": fmt(bp.bound_vstar),
    }
    report.verdicts["ordered"] = bp.ordered
    report.counterexample = not bp.ordered
    return report


def cmd_verify(args) -> tuple[int, list[dict]]:
    ids = list(THEOREMS) if args.theorem == "all" else [args.theorem]
    results = []
    status = EXIT_OK
    for tid in ids:
        res = run_sweep(tid, max_n=args.max_n, trials=args.trials, seed=args.seed, jobs=args.jobs,
                        stop_on_failure=True)
        results.append(res.to_dict())
        if not res.ok:
            status = EXIT_COUNTEREXAMPLE
        if not args.json:
            mark = "PASS" if res.ok else "FAIL"
            print(f"[{mark}] {tid}: {res.instances} instances, {res.failures} counterexamples, "
                  f"{res.equality_cases} equality cases ({res.elapsed:.2f}s) {res.params}")
            if res.first_counterexample is not None:
                print("  counterexample: " + json.dumps(res.first_counterexample))
    if args.json:
        print(json.dumps(results if len(results) > 1 else results[0], indent=2))
    return status, results


def _print_human(report: Report) -> None:
    print(f"{report.command}: {json.dumps(report.instance)}")
    if report.kind:
        print(f"kind: {report.kind}")
    table = report.extra.get("table")
    if table is not None:
        for row in table:
            print("  " + " ".join(str(x) for x in row))
    for name, values in report.multisets.items():
        print(f"{name}: {{{', '.join(values)}}}  sum={report.sums.get(name)}  product={report.products.get(name)}")
    for key, val in report.extra.items():
        if key not in ("table",):
            print(f"{key}: {json.dumps(val)}")
    if report.sums and not report.multisets:
        for k, v in report.sums.items():
            print(f"{k} = {v}")
    for k, v in report.verdicts.items():
        print(f"{k}: {v}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hookforge", description="Hook statistics, shuffling and majorization checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def objects(p, weight=True):
        p.add_argument("--partition", help="partition, e.g. 4,3,1")
        p.add_argument("--tree", help="parent array with 0 for the root, e.g. 0,1,1,1,2,3,5,5")
        p.add_argument("--solid", help="solid partition: JSON file or inline [[i,j,k],...] / plane-partition matrix")
        p.add_argument("--poset", help="poset file: first line n, then 'a < b' lines")
        p.add_argument("--ideal", help="tree-product ideal JSON file or inline JSON")
        if weight:
            p.add_argument("--weight", help=f"weight JSON file/inline [[shift, value],...] or preset {PRESETS}")
        p.add_argument("--json", action="store_true", help="emit the JSON report")

    p = sub.add_parser("stats", help="per-cell statistics, multisets, sums and products")
    objects(p)
    p.add_argument("--kind", help="statistic to tabulate")
    p = sub.add_parser("count", help="SYT / increasing-tree / linear-extension counts")
    objects(p, weight=False)
    p = sub.add_parser("shuffle", help="run a shuffling procedure and report its trace")
    objects(p)
    p.add_argument("--subset", help="JSON array of cells / vertices / cubes / elements")
    p = sub.add_parser("bounds", help="linear-extension bounds for a solid partition")
    p.add_argument("--solid", required=True)
    p.add_argument("--json", action="store_true")
    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--theorem", default="all", choices=["all", *THEOREMS])
    p.add_argument("--max-n", type=int, default=None, help="size bound (defaults to the acceptance value)")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    return parser


COMMANDS = {"stats": cmd_stats, "count": cmd_count, "shuffle": cmd_shuffle, "bounds": cmd_bounds}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            if (args.max_n is not None and args.max_n < 0) or (args.trials is not None and args.trials <= 0) or args.jobs < 1:
                raise InputError("--max-n must be >= 0, --trials and --jobs positive")
            status, _ = cmd_verify(args)
            return status
        report = COMMANDS[args.command](args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(report.to_json(indent=2))
    else:
        _print_human(report)
    return EXIT_COUNTEREXAMPLE if report.counterexample else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
