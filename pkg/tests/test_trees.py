from itertools import combinations, permutations

import pytest

from hookforge.enumerate import rooted_trees
from hookforge.major import Multiset
from hookforge.trees import (
    RootedTree,
    TreeError,
    branch_sizes,
    distances,
    is_root_path,
    it_count,
    parse_tree,
    path_tree,
    shuffle_tree,
    star_tree,
    verify_tree_shuffle,
)

TAU = parse_tree("0,1,1,1,2,3,5,5")


def brute_increasing(tree: RootedTree) -> int:
    return sum(
        1
        for perm in permutations(range(1, tree.n + 1))
        if all(perm[v - 1] > perm[tree.parent[v - 1] - 1] for v in tree.vertices() if tree.parent[v - 1])
    )


def test_tau_statistics():
    assert branch_sizes(TAU) == Multiset([8, 4, 2, 1, 3, 1, 1, 1])
    assert distances(TAU) == Multiset([1, 2, 2, 2, 3, 3, 4, 4])
    assert branch_sizes(TAU).product() == 192
    assert distances(TAU).product() == 1152
    assert it_count(TAU) == 210


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_path_and_star(n):
    p = path_tree(n)
    assert branch_sizes(p) == distances(p) == Multiset(range(1, n + 1))
    assert it_count(p) == 1
    s = star_tree(n)
    assert branch_sizes(s) == Multiset([n] + [1] * (n - 1))
    assert distances(s) == Multiset([1] + [2] * (n - 1))
    assert it_count(s) == (1 if n == 1 else __import__("math").factorial(n - 1))


def test_malformed_trees():
    with pytest.raises(TreeError):
        RootedTree((0, 0))
    with pytest.raises(TreeError):
        RootedTree((2, 3, 2))  # no root
    with pytest.raises(TreeError):
        RootedTree((0, 3, 2))  # cycle 2 <-> 3
    with pytest.raises(TreeError):
        RootedTree((0, 5))
    with pytest.raises(ValueError):
        parse_tree("0,a")


def test_root_path():
    assert is_root_path(path_tree(4))
    assert not is_root_path(star_tree(3))
    assert is_root_path(RootedTree((0,)))
    assert not is_root_path(TAU)


@pytest.mark.parametrize("n", range(1, 8))
def test_it_count_matches_brute_force(n):
    for t in rooted_trees(n):
        assert it_count(t) == brute_increasing(t)


def test_invariants_on_relabelled_tree():
    # Root is not vertex 1 here.
    t = RootedTree((3, 3, 0, 1))
    assert t.root == 3
    assert t.branch[3] == 4 and t.depth[3] == 1 and t.depth[4] == 3
    assert sum(branch_sizes(t)) == sum(distances(t))


def test_shuffle_examples():
    assert shuffle_tree(TAU, [1]) == [1]
    assert shuffle_tree(TAU, [5]) == [1]
    assert shuffle_tree(TAU, []) == []
    everything = list(TAU.vertices())
    assert shuffle_tree(TAU, everything) == everything
    rep = verify_tree_shuffle(TAU, everything)
    assert rep.branch_sum_Y == rep.distance_sum_X == 21
    rep = verify_tree_shuffle(TAU, [5])
    assert rep.ok and rep.branch_sum_Y == 8 and rep.distance_sum_X == 3
    with pytest.raises(TreeError):
        shuffle_tree(TAU, [9])


def test_shuffle_tie_break_and_subtree():
    s = star_tree(3)
    # 2 and 3 tie on distance; 2 goes to the root, 3 stays in its own branch.
    assert shuffle_tree(s, [2, 3]) == [1, 3]
    assert shuffle_tree(TAU, [7, 8], top=5) == [5, 8]
    with pytest.raises(TreeError):
        shuffle_tree(TAU, [6], top=5)


def test_reversed_comparison_is_not_a_theorem():
    # sum d(Y) <= sum b(X) fails on the star; the valid direction holds.
    rep = verify_tree_shuffle(star_tree(3), [2, 3])
    assert rep.distance_sum_Y == 3 and rep.branch_sum_X == 2
    assert rep.ok


@pytest.mark.parametrize("n", range(1, 8))
def test_shuffle_all_subsets(n):
    for t in rooted_trees(n):
        for r in range(n + 1):
            for X in combinations(t.vertices(), r):
                rep = verify_tree_shuffle(t, X)
                assert rep.ok
                assert len(rep.Y) == len(rep.X)
