from fractions import Fraction
from itertools import permutations

import pytest

from hookforge.enumerate import random_poset, rooted_trees
from hookforge.major import Multiset
from hookforge.posets import (
    FinitePoset,
    LimitExceeded,
    antichain,
    chain,
    format_poset,
    hp_bound,
    le_count,
    parse_poset,
    solid_poset,
    tree_poset,
    upper_ideal_sizes,
    young_poset,
)
from hookforge.trees import branch_sizes, it_count
from hookforge.young import Partition


def brute_le(P: FinitePoset) -> int:
    return sum(
        1
        for perm in permutations(range(1, P.n + 1))
        if all(perm.index(a) < perm.index(b) for a in range(1, P.n + 1) for b in range(1, P.n + 1) if a != b and P.leq(a, b))
    )


@pytest.mark.parametrize("n", [0, 1, 4, 7])
def test_chain_and_antichain(n):
    assert le_count(chain(n)) == 1
    assert le_count(antichain(n)) == __import__("math").factorial(n)
    assert upper_ideal_sizes(chain(n)) == Multiset(range(1, n + 1))
    assert upper_ideal_sizes(antichain(n)) == Multiset([1] * n)
    assert hp_bound(chain(n)) == 1


def test_young_cell_poset():
    assert le_count(young_poset(Partition((4, 3, 1)))) == 70


def test_tree_poset_equality():
    for t in rooted_trees(6):
        P = tree_poset(t)
        assert upper_ideal_sizes(P) == branch_sizes(t)
        assert hp_bound(P) == it_count(t) == le_count(P)


def test_claw_poset():
    P = solid_poset([(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)])
    assert le_count(P) == 6
    assert hp_bound(P) == 6


def test_relations_validation():
    with pytest.raises(ValueError, match="cycle"):
        FinitePoset(3, ((1, 2), (2, 3), (3, 1)))
    with pytest.raises(ValueError):
        FinitePoset(2, ((1, 1),))
    with pytest.raises(ValueError):
        FinitePoset(2, ((1, 3),))


def test_closure_and_covers():
    P = FinitePoset(4, ((1, 2), (2, 3), (1, 3), (1, 4)))
    assert P.leq(1, 3) and not P.leq(3, 1)
    assert P.covers() == [(1, 2), (1, 4), (2, 3)]


def test_limit(monkeypatch):
    with pytest.raises(LimitExceeded):
        le_count(antichain(5), limit=4)
    monkeypatch.setenv("HOOKFORGE_LIMIT", "3")
    with pytest.raises(LimitExceeded):
        le_count(antichain(4))


def test_text_format_roundtrip():
    P = parse_poset("4\n1 < 2\n# comment\n2 < 3\n1 < 4\n")
    assert P.n == 4
    Q = parse_poset(format_poset(P))
    assert Q.covers() == P.covers()
    with pytest.raises(ValueError, match="line 2"):
        parse_poset("3\n1 <\n")
    with pytest.raises(ValueError):
        parse_poset("")


def test_random_posets_against_brute_force():
    for seed in range(60):
        P = random_poset(1 + seed % 7, (seed % 10) / 10, seed)
        exact = le_count(P)
        assert exact == brute_le(P)
        assert exact >= hp_bound(P)
        assert isinstance(hp_bound(P), Fraction)


def test_random_poset_density_zero_is_antichain():
    P = random_poset(6, 0.0, 3)
    assert P.relations == ()
    assert random_poset(6, 0.5, 11) == random_poset(6, 0.5, 11)
