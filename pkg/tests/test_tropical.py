import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symtrop.acceptance import EXTRA_DECIC_FACET, GAMMA5, L_SETS, TROP_N
from symtrop.partitions import Partition, even_partitions, fuse, power, superdominates
from symtrop.polyhedra import Cone, cone_equal
from symtrop.symfunc import power_sum_value
from symtrop.tropical import (
    coordinate_labels, double_hull, format_inequality, max_closure, orthant_q, parse_inequality, t_k_cone,
    t_k_inequalities, stabilization_tau, tcone, trop_bp_dual, trop_vandermonde, trop_vandermonde_generators,
    tropical_scale, tropical_sum,
)


def facets_of(strings, d):
    return {parse_inequality(s, coordinate_labels(d)) for s in strings}


def test_tropical_operations():
    assert tropical_sum((1, 5), (3, 2)) == (3, 5)
    assert tropical_scale(2, (1, -1)) == (3, 1)
    q = orthant_q(3, 0)
    assert q.contains_point((-1, 2, 0)) and not q.contains_point((1, 0, 0))


def test_max_closure_validates_lineality_vector():
    m = Cone.from_v(3, [(1, 0, 0)], [(1, 2, 3)])
    with pytest.raises(ValueError):
        max_closure(m, (1, 1, 1))
    with pytest.raises(ValueError):
        max_closure(m, (-1, -2, -3))
    with pytest.raises(ValueError):
        max_closure(m, (1, 2))


def test_max_closure_contains_tropical_sums():
    m = Cone.from_v(3, [(1, 0, 0)], [(1, 2, 3)])
    closed = max_closure(m, (1, 2, 3))
    assert closed.contains(m)
    rng = random.Random(5)

    def sample():
        w, t = rng.randint(0, 5), rng.randint(-4, 4)
        return [w * x + t * k for x, k in zip((1, 0, 0), (1, 2, 3))]

    for _ in range(100):
        a, b = sample(), sample()
        assert m.contains_point(a) and closed.contains_point(tropical_sum(a, b))


def test_fixpoints():
    cell = trop_vandermonde(4)
    assert cone_equal(max_closure(cell, (1, 2, 3, 4)), cell)
    bp = trop_bp_dual(3)
    assert cone_equal(tcone(bp), bp)
    hull, rounds = double_hull(cell, with_rounds=True)
    assert cone_equal(hull, cell) and rounds == 1


def test_double_hull_rebuilds_the_cell():
    for d in (3, 4, 5):
        start = Cone.from_v(d, [(1,) * d], [tuple(range(1, d + 1))])
        hull, rounds = double_hull(start, with_rounds=True)
        assert cone_equal(hull, trop_vandermonde(d))
        assert rounds == 2


@pytest.mark.parametrize("d", [3, 4, 5])
def test_trop_vandermonde_displays(d):
    labels = [f"y{i}" for i in range(1, d + 1)]
    cone = trop_vandermonde(d)
    assert set(cone.facets()) == {parse_inequality(s, labels) for s in TROP_N[d]}
    assert cone.lineality_space() == [tuple(range(1, d + 1))]


def test_trop_vandermonde_small_and_generators():
    two = trop_vandermonde(2)
    assert two.facets() == [(2, -1)] and two.lineality_space() == [(1, 2)]
    rays, lin = trop_vandermonde_generators(4)
    assert rays == [(1, 0, 0, 0), (2, 1, 0, 0), (1, 1, 1, 1)] and lin == [(1, 2, 3, 4)]
    with pytest.raises(ValueError):
        trop_vandermonde(1)


@pytest.mark.parametrize("d", [3, 4])
def test_trop_bp_dual_matches_sos_side(d):
    assert set(trop_bp_dual(d).facets()) == facets_of(L_SETS[d], d)


def test_trop_bp_dual_decic_extra_facet():
    got = set(trop_bp_dual(5).facets())
    assert got == facets_of(L_SETS[5], 5) | facets_of([EXTRA_DECIC_FACET], 5)
    with pytest.raises(ValueError):
        trop_bp_dual(6)


def _binomial_sides(row, coords):
    plus = fuse(power(coords[i], c) for i, c in enumerate(row) if c > 0)
    minus = fuse(power(coords[i], -c) for i, c in enumerate(row) if c < 0)
    return plus, minus


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_trop_bp_dual_facets_are_valid_binomial_inequalities(d):
    """Independent route: every facet is a product inequality of power sums."""
    coords = even_partitions(d)
    rng = random.Random(d)
    for row in trop_bp_dual(d).facets():
        plus, minus = _binomial_sides(row, coords)
        assert superdominates(plus, minus), row
        for _ in range(20):
            x = [Fraction(rng.randint(0, 12), rng.randint(1, 4)) for _ in range(rng.randint(1, 5))]
            assert power_sum_value(plus, x) >= power_sum_value(minus, x)


def test_t_k_examples():
    assert set(t_k_cone(3, 1).facets()) == facets_of(["y[2,2,2] >= y[4,2]", "y[4,2] >= y[6]"], 3)
    assert set(t_k_cone(3, 2).facets()) == facets_of(L_SETS[3], 3)
    assert t_k_cone(5, 2).contains_point(GAMMA5)
    assert not t_k_cone(5, 3).contains_point(GAMMA5)
    with pytest.raises(ValueError):
        t_k_inequalities(3, 0)


@pytest.mark.parametrize("d,tau", [(2, 1), (3, 2), (4, 2), (5, 3)])
def test_stabilization(d, tau):
    assert stabilization_tau(d) == (tau, True)


def test_gamma_violates_only_the_extra_facet():
    violated = trop_bp_dual(5).violated(GAMMA5)
    assert set(violated) == facets_of([EXTRA_DECIC_FACET], 5)


@given(st.lists(st.integers(-3, 3), min_size=7, max_size=7))
def test_inequality_format_round_trip(row):
    labels = coordinate_labels(5)
    if any(row):
        from symtrop.polyhedra import primitive
        assert parse_inequality(format_inequality(row, labels), labels) == primitive(row)


@given(st.integers(2, 5), st.data())
def test_bp_dual_closed_under_tropical_sum(d, data):
    cone = trop_bp_dual(d)
    rays = cone.extreme_rays() + cone.lineality_space() + [tuple(-x for x in l) for l in cone.lineality_space()]
    def member():
        ws = data.draw(st.lists(st.integers(0, 4), min_size=len(rays), max_size=len(rays)))
        return tuple(sum(w * r[i] for w, r in zip(ws, rays)) for i in range(cone.dim))
    a, b = member(), member()
    shift = data.draw(st.integers(-5, 5))
    assert cone.contains_point(tropical_sum(a, b))
    assert cone.contains_point(tropical_scale(shift, a))
