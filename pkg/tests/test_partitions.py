from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from symtrop.acceptance import LAMBDA8_EDGES, LAMBDA8_NODES
from symtrop.partitions import (
    Partition, covers, covers_brute_force, dominates, enum_partitions, even_partitions, fuse, hasse, hasse_dot,
    parse_partition, power, revlex_cmp, star, superdominance_trace, superdominates,
)


@st.composite
def partitions_of(draw, lo=1, hi=10):
    d = draw(st.integers(lo, hi))
    return draw(st.sampled_from(enum_partitions(d)))


@st.composite
def same_size_pair(draw, lo=1, hi=10):
    d = draw(st.integers(lo, hi))
    parts = enum_partitions(d)
    return draw(st.sampled_from(parts)), draw(st.sampled_from(parts))


def P(s):
    return parse_partition(s)


def test_parse_and_label():
    assert P("4,2^2") == Partition((4, 2, 2))
    assert P("1^4").label() == "(1^4)"
    assert P("") == Partition(())
    with pytest.raises(ValueError, match="x"):
        P("2,x")
    with pytest.raises(ValueError):
        P("0,1")


def test_enum_examples():
    assert [tuple(p) for p in enum_partitions(4)] == [(1, 1, 1, 1), (2, 1, 1), (3, 1), (2, 2), (4,)]
    assert enum_partitions(0) == (Partition(()),)
    assert [tuple(p) for p in even_partitions(4)] == [(2, 2, 2, 2), (4, 2, 2), (6, 2), (4, 4), (8,)]
    with pytest.raises(ValueError):
        enum_partitions(-1)


@pytest.mark.parametrize("d,count", [(1, 1), (5, 7), (8, 22), (10, 42)])
def test_partition_counts(d, count):
    assert len(enum_partitions(d)) == count


def test_enum_is_revlex_decreasing():
    for d in range(1, 10):
        parts = enum_partitions(d)
        assert all(revlex_cmp(a, b) > 0 for a, b in zip(parts, parts[1:]))


@pytest.mark.parametrize(
    "lam,mu,expected",
    [("1^5", "2,1^3", True), ("3^4,1", "7,2^3", False), ("7,2^3", "3^4,1", False), ("4,2", "4,2", True),
     ("6,2", "4^2", True), ("4^2", "6,2", False)],
)
def test_superdominates_examples(lam, mu, expected):
    assert superdominates(P(lam), P(mu)) is expected


def test_superdominance_trace():
    assert superdominance_trace(P("2^3"), P("4,2")) == [(2, 2), (4, 6)]
    with pytest.raises(ValueError):
        superdominates(P("2"), P("3"))


def test_dominance_and_revlex():
    assert dominates(P("3,1"), P("2^2"))
    assert not dominates(P("2^2"), P("3,1"))
    assert revlex_cmp(P("1^4"), P("2,1^2")) > 0


def test_fuse_star_power():
    assert fuse([P("2^2,1"), P("3,2,1")]) == P("3,2^3,1^2")
    assert fuse([P("4,2")]) == P("4,2")
    assert star(P("3^2")) == P("6")
    assert star(P("4,3,1")) == P("7,1")
    assert power(P("3,1"), 2) == P("3^2,1^2")
    with pytest.raises(ValueError):
        star(P("5"))


def test_covers_examples():
    assert covers(P("3,3"), P("6"))
    assert covers(P("2^3,1^2"), P("4,2,1^2"))
    assert not covers(P("4,2"), P("4,2"))


def test_covers_matches_brute_force():
    for d in range(1, 10):
        parts = enum_partitions(d)
        for a in parts:
            for b in parts:
                assert covers(a, b) == covers_brute_force(a, b), (a, b)


def test_hasse_small_cases():
    assert len(hasse(5)) == 6
    chain = [P(s) for s in ("1^5", "2,1^3", "3,1^2", "2^2,1", "4,1", "3,2", "5")]
    assert set(hasse(5)) == set(zip(chain, chain[1:]))
    assert any(not superdominates(a, b) and not superdominates(b, a) for a, b in combinations(enum_partitions(6), 2))


def test_hasse_lambda8():
    edges = {(a, b) for a, b in hasse(8)}
    undirected = {frozenset((P(LAMBDA8_NODES[e[0]]), P(LAMBDA8_NODES[e[2]]))) for e in LAMBDA8_EDGES}
    assert {frozenset(e) for e in edges} == undirected
    assert (P("1^8"), P("2,1^6")) in edges and (P("4^2"), P("8")) in edges


def test_hasse_dot():
    dot = hasse_dot(4)
    assert dot.startswith("digraph") and '"(2^2)"' in dot and dot.count("->") == 4


@given(partitions_of())
def test_reflexive(lam):
    assert superdominates(lam, lam)


@given(same_size_pair())
def test_antisymmetric(pair):
    a, b = pair
    if superdominates(a, b) and superdominates(b, a):
        assert a == b


@given(st.integers(1, 8).flatmap(lambda d: st.tuples(*[st.sampled_from(enum_partitions(d))] * 3)))
def test_transitive(triple):
    a, b, c = triple
    if superdominates(a, b) and superdominates(b, c):
        assert superdominates(a, c)


@given(same_size_pair())
def test_superdominance_refines_revlex(pair):
    a, b = pair
    if superdominates(a, b):
        assert revlex_cmp(a, b) >= 0


@given(same_size_pair(hi=6), same_size_pair(hi=6))
def test_fusion_is_monotone(p1, p2):
    (a, b), (c, e) = p1, p2
    if superdominates(a, b) and superdominates(c, e):
        assert superdominates(fuse([a, c]), fuse([b, e]))


@given(same_size_pair(hi=8), st.integers(1, 4))
def test_powers_preserve_order(pair, k):
    a, b = pair
    assert superdominates(a, b) == superdominates(power(a, k), power(b, k))


@given(partitions_of(lo=2))
def test_star_is_below(lam):
    if lam.length >= 2:
        assert superdominates(lam, star(lam))


@given(partitions_of())
def test_json_shape(lam):
    assert list(lam) == sorted(lam, reverse=True)
    assert parse_partition(lam.label().strip("()")) == lam
