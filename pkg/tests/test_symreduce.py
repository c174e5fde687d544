from fractions import Fraction
from math import prod

import pytest

from symtrop.acceptance import REFERENCE_PENCILS, L_SETS, reference_matrix
from symtrop.partitions import parse_partition, superdominates
from symtrop.symfunc import SymFn, p
from symtrop.symreduce import (
    CONGRUENCES, PreconditionError, apply_congruence, block_is_diagonalized, build_pencil, finite_gram_entry,
    greatest, limit_gram_entry, make_term, parse_kind, trop_of_sos, trop_of_sos_inequalities,
)
from symtrop.tropical import coordinate_labels, parse_inequality

P = parse_partition


def facets_of(strings, d):
    return {parse_inequality(s, coordinate_labels(d)) for s in strings}


def test_limit_entry_examples():
    assert limit_gram_entry(((1, 1, 1), ()), ((1, 1, 1), ())) == p(2, 2, 2) - 3 * p(4, 2) + 2 * p(6)
    assert limit_gram_entry(((1,), (2,)), ((3,), ())) == p(4, 2)
    assert limit_gram_entry(((1, 2), ()), ((1, 2), ())) == p(4, 2) - p(6)
    assert limit_gram_entry(((1,), (2,)), ((1, 2), ())) == SymFn.zero(6)
    assert limit_gram_entry(((1, 0), ()), ((0, 1), ()), "S") == SymFn.zero(2)
    with pytest.raises(ValueError):
        limit_gram_entry(((1,), ()), ((2,), ()))


def test_parse_kind():
    assert parse_kind("B(10)") == ("B", 5)
    assert parse_kind("b8") == ("B", 4)
    assert parse_kind("S(4)") == ("S", 2)
    for bad in ("B(12)", "S(6)", "C(4)", "B"):
        with pytest.raises(ValueError):
            parse_kind(bad)


def test_b4_pencil():
    pencil = build_pencil("B(4)")
    assert [b.matrix for b in pencil.blocks] == [[[p(2, 2)]], [[p(4)]], [[p(2, 2) - p(4)]]]
    assert set(trop_of_sos(pencil).facets()) == facets_of(L_SETS[2], 2)


@pytest.mark.parametrize("kind", ["B(6)", "B(8)", "B(10)"])
def test_pencils_match_reference_blocks(kind):
    pencil = build_pencil(kind)
    assert [b.label for b in pencil.blocks] == list(REFERENCE_PENCILS[kind])
    for block in pencil.blocks:
        assert block.matrix == reference_matrix(kind, block.label)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_trop_of_sos(d):
    pencil = build_pencil(f"B({2 * d})")
    assert set(trop_of_sos(pencil).facets()) == facets_of(L_SETS[d], d)
    assert set(trop_of_sos(pencil, include_chain=False).facets()) == facets_of(L_SETS[d], d)


def test_congruence_examples():
    raw = next(b.raw for b in build_pencil("B(8)").blocks if b.label == "(2,0)")
    out = apply_congruence(raw, CONGRUENCES[(4, "(2,0)")])
    assert out[2][2] == 2 * p(6, 2) - 2 * p(4, 4)
    block = next(b for b in build_pencil("B(8)").blocks if b.label == "(2,0)")
    assert block.matrix == out
    assert block_is_diagonalized(block, [2, 1]) and not block_is_diagonalized(block, [1, 1, 1])
    identity = [[Fraction(int(i == j)) for j in range(len(raw))] for i in range(len(raw))]
    assert apply_congruence(raw, identity) == raw
    raw10 = next(b.raw for b in build_pencil("B(10)").blocks if b.label == "(3,0)")
    out10 = apply_congruence(raw10, CONGRUENCES[(5, "(3,0)")])
    a, b, c = p(2, 2, 2, 2, 2), p(4, 2, 2, 2), p(6, 2, 2)
    assert out10[0][0] == a - 3 * b + 2 * c
    with pytest.raises(ValueError):
        apply_congruence(raw, [[1]])


def test_greatest_and_precondition():
    assert greatest([P("4,2"), P("2^3"), P("6")]) == P("2^3")
    assert greatest([P("3^4,1"), P("7,2^3")]) is None
    pencil = build_pencil("B(6)")
    pencil.blocks[0].matrix = [[SymFn({P("3^4,1"): 1, P("7,2^3"): 1})]]
    pencil.coordinates = pencil.coordinates + (P("3^4,1"), P("7,2^3"))
    with pytest.raises(PreconditionError):
        trop_of_sos_inequalities(pencil)


def _falling(n, k):
    return prod(range(n - k + 1, n + 1))


@pytest.mark.parametrize("kind,ns", [("B(6)", (6, 8, 10)), ("B(8)", (8, 9))])
def test_limit_entries_against_finite_symmetrization(kind, ns):
    """Finite-n averages, rescaled by the exact orbit prefactor, reproduce the limit entries."""
    pencil = build_pencil(kind)
    for block in pencil.blocks:
        terms = block.vector.terms
        for s in terms:
            for t in terms:
                support = sum(1 for a in s[0] if a)
                if support != sum(1 for a in t[0] if a):
                    continue
                limit = limit_gram_entry(s, t)
                for n in ns:
                    finite = finite_gram_entry(s, t, n)
                    rescaled = finite.scaled(Fraction(_falling(n, support), n ** support)).to_powersum()
                    assert rescaled == limit, (kind, s, t, n)


def test_finite_prefactors_tend_to_one():
    values = []
    for n in (6, 8, 10, 100):
        two = finite_gram_entry(make_term((1, 2)), make_term((1, 2)), n)
        values.append(two.monomial_coefficient((4, 2)))
    assert values == [Fraction(n, n - 1) for n in (6, 8, 10, 100)]


def test_pencil_json_and_pretty():
    pencil = build_pencil("B(6)")
    data = pencil.to_json()
    assert data["kind"] == "B(6)" and data["coordinates"] == [[2, 2, 2], [4, 2], [6]]
    assert "pencil B(6)" in pencil.pretty()
    with pytest.raises(ValueError):
        pencil.evaluate((1, 2))


def test_superdominance_sign_pattern_of_refinement():
    """The limit entry of a single term has top positive term lam and top negative term lam*."""
    from symtrop.partitions import enum_partitions, star
    from symtrop.symfunc import monomial_to_powersum
    for d in range(2, 11):
        for lam in enum_partitions(d):
            f = monomial_to_powersum(lam)
            pos, neg = f.positive_support(), f.negative_support()
            assert greatest(pos) == lam
            if lam.length >= 2:
                assert greatest(neg) == star(lam)
            for mu, c in f.terms():
                assert (c > 0) == ((lam.length - mu.length) % 2 == 0)
                assert superdominates(lam, mu)
