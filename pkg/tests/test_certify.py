import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symtrop.certify import (
    DECIC_DUAL_POINT, DECIC_COEFFS, boundary_identity, charpoly_shifted, decic_chain, decic_form, determinant,
    dual_membership, dual_membership_report, is_psd, moment_vector, principal_minors_nonnegative,
    quartic_at_inverse_root, quartic_g, random_nonnegative_point, sos4_matrices, verify_decic, verify_quartic,
    verify_sos4_extreme_rays,
)
from symtrop.exactnum import sign
from symtrop.symfunc import evaluate
from symtrop.symreduce import build_pencil

entries = st.integers(-4, 4)


def test_psd_examples():
    assert is_psd([[1, 0], [0, 1]])
    assert not is_psd([[1, 2], [2, 1]])
    assert determinant([[1, 2], [2, 1]]) == -3
    assert is_psd([[0]])
    with pytest.raises(ValueError):
        is_psd([[1, 2], [3, 4]])


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_psd_two_routes(rows):
    n = len(rows)
    sym = [[Fraction(rows[i][j] + rows[j][i]) for j in range(n)] for i in range(n)]
    gram = [[sum(Fraction(rows[k][i] * rows[k][j]) for k in range(n)) for j in range(n)] for i in range(n)]
    assert is_psd(sym) == principal_minors_nonnegative(sym)
    assert is_psd(gram) and principal_minors_nonnegative(gram)


def test_charpoly():
    assert charpoly_shifted([[2, 1], [1, 2]]) == [1, 4, 3]


def test_decic_dual_point():
    pencil = build_pencil("B(10)")
    assert dual_membership(DECIC_DUAL_POINT, pencil)
    assert dual_membership_report(DECIC_DUAL_POINT, pencil).passed
    for block in pencil.evaluate(DECIC_DUAL_POINT):
        assert principal_minors_nonnegative(block)
    assert not dual_membership((1, 1, 1, 1, 1, 1, -1), pencil)
    pairing = sum(Fraction(a) * c for a, c in zip(DECIC_DUAL_POINT, DECIC_COEFFS))
    assert pairing == Fraction(-49, 3)


def test_moment_vectors_are_in_the_dual_cone():
    pencil = build_pencil("B(10)")
    rng = random.Random(3)
    for _ in range(20):
        x = random_nonnegative_point(rng)
        assert dual_membership(moment_vector(pencil.coordinates, x), pencil)


def test_decic_chain_and_sampling():
    rng = random.Random(11)
    f = decic_form()
    for _ in range(200):
        x = random_nonnegative_point(rng)
        chain = decic_chain(x)
        assert evaluate(f, x) == chain["value"] >= 0
        assert chain["lyapunov_slack"] >= 0 and chain["amgm_slack"] >= 0
    assert verify_decic(samples=200).passed


def test_quartic_parts():
    assert quartic_g(Fraction(1), Fraction(9, 10)) == Fraction(-3, 200)
    ok, zeros = boundary_identity()
    assert ok and len(zeros) == 2
    assert sign(quartic_at_inverse_root(Fraction(1), 2)) >= 0
    assert quartic_at_inverse_root(Fraction(1), 4) == quartic_g(Fraction(1), Fraction(1, 2))
    assert verify_quartic().passed


@given(st.fractions(min_value=-3, max_value=3, max_denominator=12), st.integers(1, 60))
def test_quartic_nonnegative_at_inverse_roots(x, n):
    assert sign(quartic_at_inverse_root(x, n)) >= 0


def test_sos4_examples():
    a, b, c = sos4_matrices((1, 1, 1, 1, 1))
    assert a == [[1, 1], [1, 1]] and b == [[1, 1], [1, 1]] and c == [[0]]
    a, b, c = sos4_matrices((0, 0, 0, 1, 0))
    assert a == [[0, 0], [0, 1]] and is_psd(a) and c == [[1]]
    a, b, c = sos4_matrices((1, 4, 4, 16, 4))
    assert determinant(a) == 0 and determinant(b) == 0 and c == [[12]]
    assert verify_sos4_extreme_rays().passed
