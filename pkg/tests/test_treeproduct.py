import json
import random
from itertools import combinations

import pytest

from hookforge.enumerate import partitions_of, random_ideal, random_tree, random_weight, rooted_trees, solid_partitions_of
from hookforge.major import Verdict, majorizes
from hookforge.solid import shuffle_space, stat_multisets
from hookforge.trees import RootedTree, branch_sizes, distances, parse_tree, shuffle_tree
from hookforge.treeproduct import (
    IdealError,
    TreeProductIdeal,
    chain_product,
    hook_multisets,
    hook_pair,
    hook_values,
    ideal_to_json,
    pair_weight_total,
    parse_ideal,
    shuffle_product,
    single_tree,
    verify_product_shuffle,
)
from hookforge.weights import ShiftWeight
from hookforge.young import Partition, shuffle_plane, stat_multiset

ONES = ShiftWeight.named("ones")
AXES = ShiftWeight.named("axes")
PLANES = ShiftWeight.named("planes")


def test_young_specialization():
    lam = Partition((4, 3, 1))
    om = chain_product(lam.cells(), 2)
    assert hook_multisets(om, AXES) == (stat_multiset(lam, "hook"), stat_multiset(lam, "anti-hook"))
    assert hook_multisets(om, ONES) == (stat_multiset(lam, "area"), stat_multiset(lam, "anti-area"))


@pytest.mark.parametrize("n", range(1, 7))
def test_tree_specialization(n):
    for t in rooted_trees(n):
        assert hook_multisets(single_tree(t), ONES) == (branch_sizes(t), distances(t))


@pytest.mark.parametrize("n", range(1, 6))
def test_solid_specialization(n):
    for lam in solid_partitions_of(n):
        om = chain_product(lam.cubes, 3)
        assert hook_multisets(om, AXES) == stat_multisets(lam, "R")
        assert hook_multisets(om, PLANES) == stat_multisets(lam, "Q")
        assert hook_multisets(om, ONES) == stat_multisets(lam, "V")


def test_singleton_and_zero_weight():
    t = parse_tree("0,1")
    om = TreeProductIdeal((t, t), frozenset({(1, 1)}))
    g = ShiftWeight({(0, 0): 5, (1, 0): 2})
    assert hook_pair(om, g, (1, 1)) == (5, 5)
    om2 = TreeProductIdeal((t, t), frozenset({(1, 1), (2, 1)}))
    assert hook_pair(om2, g, (1, 1)) == (7, 5)
    assert hook_pair(om2, g, (1, 1), reverse=True) == (5, 7)
    H, Hs = hook_multisets(om2, ShiftWeight({}))
    assert list(H) == list(Hs) == [0, 0]


def test_reverse_swaps():
    rng = random.Random(3)
    for seed in range(10):
        factors = [random_tree(rng.randint(1, 4), rng) for _ in range(2)]
        om = TreeProductIdeal(tuple(factors), random_ideal(factors, rng.randint(1, len(factors[0].parent) * len(factors[1].parent)), seed))
        g = random_weight((4, 4), seed)
        fwd = hook_values(om, g)
        rev = hook_values(om, g, reverse=True)
        assert all(rev[v] == (fwd[v][1], fwd[v][0]) for v in om)


def random_instance(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 3)
    factors = [random_tree(rng.randint(1, 4), rng) for _ in range(d)]
    total = 1
    for f in factors:
        total *= f.n
    om = TreeProductIdeal(tuple(factors), random_ideal(factors, rng.randint(1, min(total, 9)), seed))
    return om, random_weight((4,) * d, seed)


def test_pair_weight_total_oracle():
    for seed in range(80):
        om, g = random_instance(seed)
        H, Hs = hook_multisets(om, g)
        assert H.total == Hs.total == pair_weight_total(om, g)
        assert majorizes(H, Hs) is Verdict.MAJORIZES


def test_product_shuffle_all_subsets():
    for seed in range(40):
        om, g = random_instance(seed)
        values = hook_values(om, g)
        elems = list(om)
        for r in range(len(elems) + 1):
            for X in combinations(elems, r):
                rep = verify_product_shuffle(om, g, X, values)
                assert rep.ok
                assert len(rep.stages) == om.dim + 1


@pytest.mark.parametrize("n", range(1, 7))
def test_product_shuffle_matches_plane_shuffle(n):
    for lam in partitions_of(n):
        om = chain_product(lam.cells(), 2)
        cells = lam.cells()
        for r in range(len(cells) + 1):
            for X in combinations(cells, r):
                X1, Y = shuffle_plane(lam, X)
                stages = shuffle_product(om, X)
                assert stages[1] == X1 and stages[2] == Y


def test_product_shuffle_matches_space_and_tree_shuffles():
    for lam in solid_partitions_of(5):
        om = chain_product(lam.cubes, 3)
        for X in combinations(list(lam), 3):
            assert shuffle_product(om, X) == shuffle_space(lam, X).stages
    for t in rooted_trees(6):
        om = single_tree(t)
        for X in combinations(t.vertices(), 3):
            assert shuffle_product(om, [(v,) for v in X])[-1] == [(v,) for v in shuffle_tree(t, X)]


def test_validation():
    t = parse_tree("0,1,1")
    with pytest.raises(IdealError, match="not a lower ideal"):
        TreeProductIdeal((t,), frozenset({(2,)}))
    with pytest.raises(IdealError):
        TreeProductIdeal((t,), frozenset({(1, 1)}))
    with pytest.raises(IdealError):
        TreeProductIdeal((t,), frozenset({(4,)}))
    with pytest.raises(IdealError):
        TreeProductIdeal((), frozenset())
    with pytest.raises(IdealError):
        parse_ideal({"factors": ["0,1"]})
    with pytest.raises(IdealError):
        parse_ideal({"factors": ["0,1"], "elements": [[1], [1]]})


def test_json_roundtrip():
    t = RootedTree((0, 1, 1))
    om = TreeProductIdeal((t, t), frozenset({(1, 1), (2, 1), (1, 3)}))
    g = ShiftWeight.from_pairs([[[0, 0], 1], [[1, 0], 2]])
    data = json.loads(json.dumps(ideal_to_json(om, g)))
    om2, g2 = parse_ideal(data)
    assert om2 == om and g2.table == g.table
    om3, g3 = parse_ideal({"factors": ["0,1,1", [0, 1, 1]], "elements": [[1, 1]], "weight": "axes"})
    assert g3 == AXES and len(om3) == 1
    assert parse_ideal({"factors": ["0"], "elements": [[1]]})[1] is None
