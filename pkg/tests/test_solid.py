from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hookforge.enumerate import partitions_of, solid_partitions_of
from hookforge.major import Multiset, Verdict, majorizes
from hookforge.solid import (
    IdealError,
    SolidPartition,
    comparable_pairs,
    le_bound_pair,
    parse_solid,
    q_hook,
    r_hook,
    shuffle_space,
    stat_multisets,
    stat_table,
)
from hookforge.young import stat_multiset

CLAW = SolidPartition(frozenset({(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)}))


def test_claw_statistics():
    assert stat_multisets(CLAW, "R") == (Multiset([4, 1, 1, 1]), Multiset([2, 2, 2, 1]))
    assert stat_multisets(CLAW, "Q") == (Multiset([4, 1, 1, 1]), Multiset([2, 2, 2, 1]))
    assert stat_multisets(CLAW, "V") == (Multiset([4, 1, 1, 1]), Multiset([2, 2, 2, 1]))
    with pytest.raises(ValueError):
        stat_multisets(CLAW, "W")


@pytest.mark.parametrize("a,b,c", [(1, 1, 1), (2, 2, 2), (3, 1, 2), (2, 3, 4)])
def test_box_corner(a, b, c):
    box = SolidPartition.box(a, b, c)
    assert r_hook(box, 1, 1, 1) == a + b + c - 2
    assert q_hook(box, 1, 1, 1) == a * b * c - (a - 1) * (b - 1) * (c - 1)
    assert stat_multisets(box, "V")[0].values[0] == a * b * c


def test_box_bounds():
    bp = le_bound_pair(SolidPartition.box(2, 2, 2))
    assert bp.bound_v == bp.bound_vstar == Fraction(315, 32)
    assert bp.exact == 48 and bp.ordered


def test_claw_bound_pair():
    bp = le_bound_pair(CLAW)
    assert (bp.bound_v, bp.bound_vstar, bp.exact) == (6, 3, 6)
    assert bp.ordered


def test_bound_pair_skips_exact_over_threshold():
    bp = le_bound_pair(SolidPartition.box(2, 2, 2), threshold=5)
    assert bp.exact is None and bp.ordered


@pytest.mark.parametrize("n", range(1, 8))
def test_sum_identities_and_majorization(n):
    for lam in solid_partitions_of(n):
        for kind, free in (("R", 1), ("Q", 2), ("V", 3)):
            plain, starred = stat_multisets(lam, kind)
            assert plain.total == starred.total == comparable_pairs(lam, free)
            assert majorizes(plain, starred) is Verdict.MAJORIZES


@pytest.mark.parametrize("n", range(1, 9))
def test_flat_solids_match_young(n):
    for lam in partitions_of(n):
        solid = SolidPartition(frozenset((i, j, 1) for i, j in lam.cells()))
        assert stat_multisets(solid, "R") == (stat_multiset(lam, "hook"), stat_multiset(lam, "anti-hook"))
        assert stat_multisets(solid, "V") == (stat_multiset(lam, "area"), stat_multiset(lam, "anti-area"))


def test_rejects_non_ideals():
    with pytest.raises(IdealError, match="not a lower ideal"):
        SolidPartition(frozenset({(1, 1, 1), (1, 1, 3)}))
    with pytest.raises(IdealError):
        SolidPartition(frozenset({(0, 1, 1)}))
    with pytest.raises(IdealError):
        parse_solid([[1, 1, 1], [1, 1, 1]])
    with pytest.raises(IdealError):
        parse_solid({"heights": []})
    with pytest.raises(IdealError):
        r_hook(CLAW, 2, 2, 1)


def test_matrix_forms():
    lam = parse_solid([[2, 1], [1]])
    assert lam.cubes == {(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)}
    assert lam.to_matrix() == [[2, 1], [1]]
    assert parse_solid({"matrix": [[2, 1], [1]]}) == lam
    assert parse_solid({"cubes": [[1, 1, 1]]}) == SolidPartition(frozenset({(1, 1, 1)}))
    assert parse_solid([]) == SolidPartition()
    # A lone length-3 row reads as a cube triple, here one missing its support.
    with pytest.raises(IdealError):
        parse_solid([[1, 1, 2]])
    with pytest.raises(IdealError):
        parse_solid([[1, 2]])


def test_stat_table_rows():
    rows = dict((c, (p, s)) for c, p, s in stat_table(CLAW, "R"))
    assert rows[(1, 1, 1)] == (4, 1)
    assert rows[(2, 1, 1)] == (1, 2)


def test_claw_shuffle_chain():
    trace = shuffle_space(CLAW, [(2, 1, 1), (1, 2, 1), (1, 1, 2)])
    assert trace.sums == [6, 6, 6, 6]
    assert trace.stages[-1] == [(1, 1, 1), (1, 1, 2), (1, 2, 1)]
    trace = shuffle_space(CLAW, [(1, 1, 2)])
    assert trace.stages[-1] == [(1, 1, 1)]
    assert trace.sums == [2, 2, 2, 4]
    assert trace.ok


@pytest.mark.parametrize("n", range(1, 7))
def test_shuffle_chain_all_subsets(n):
    for lam in solid_partitions_of(n):
        cubes = list(lam)
        for r in range(len(cubes) + 1):
            for X in combinations(cubes, r):
                trace = shuffle_space(lam, X)
                assert trace.ok
                assert len(trace.stages[-1]) == r


@given(st.lists(st.lists(st.integers(0, 3), min_size=0, max_size=3), max_size=3))
def test_matrix_roundtrip_on_plane_partitions(rows):
    rows = [sorted(r, reverse=True) for r in rows]
    # Make columns weakly decreasing too.
    for i in range(1, len(rows)):
        rows[i] = [min(h, rows[i - 1][j]) if j < len(rows[i - 1]) else 0 for j, h in enumerate(rows[i])]
    lam = SolidPartition.from_matrix(rows)
    assert SolidPartition.from_matrix(lam.to_matrix()) == lam
