from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from symtrop.exactnum import (
    QSqrt2, QuadExt, UniPoly, format_rational, globally_nonnegative, sign, sign_qsqrt2, sqrt_of,
    squarefree_decomposition, sturm_real_roots, to_rational,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def test_to_rational_and_format():
    assert to_rational("3/4") == Fraction(3, 4)
    assert to_rational(2) == Fraction(2)
    assert format_rational(Fraction(-49, 3)) == "-49/3"
    with pytest.raises((TypeError, ValueError)):
        to_rational(0.1)


@pytest.mark.parametrize("a,b,expected", [(0, 0, 0), (-1, 1, 1), (3, -2, 1), (-3, 2, -1), (1, 1, 1), (-1, -1, -1)])
def test_sign_qsqrt2_examples(a, b, expected):
    assert sign_qsqrt2(QSqrt2(a, b)) == expected


@given(rationals, rationals)
def test_sign_matches_sympy(a, b):
    exact = sympy.Rational(a.numerator, a.denominator) + sympy.Rational(b.numerator, b.denominator) * sympy.sqrt(2)
    assert sign_qsqrt2(QSqrt2(a, b)) == int(sympy.sign(exact))


@given(rationals, rationals, rationals, rationals)
def test_field_axioms(a, b, c, e):
    x, y = QSqrt2(a, b), QSqrt2(c, e)
    assert (x + y) - y == x
    assert x * y == y * x
    if x != 0:
        assert x * x.inverse() == 1
        assert (x * y) / x == y


def test_sqrt_squares_to_radicand():
    r3 = sqrt_of(3)
    assert r3 * r3 == 3
    assert sign(r3 - Fraction(17, 10)) == 1
    assert sign(r3 - Fraction(18, 10)) == -1
    with pytest.raises(ValueError):
        QSqrt2(1, 1) + sqrt_of(3)


@pytest.mark.parametrize(
    "coeffs,count",
    [([1, 0, 1], 0), ([-2, 0, 1], 2), ([128, Fraction(-556, 5), -80, 0, 64], 0), ([0, 0, 1], 1), ([-1, 0, 0, 1], 1)],
)
def test_sturm_examples(coeffs, count):
    assert sturm_real_roots(UniPoly(coeffs)) == count


def test_sturm_rejects_zero():
    with pytest.raises(ValueError):
        sturm_real_roots(UniPoly([]))


@given(
    st.lists(st.integers(-6, 6), min_size=0, max_size=4),
    st.lists(st.tuples(st.integers(-5, 5), st.integers(1, 5)), max_size=2),
    st.lists(st.integers(1, 3), min_size=0, max_size=4),
)
def test_sturm_on_constructed_products(roots, quadratics, mults):
    """Product of known linear and irreducible quadratic factors."""
    p = UniPoly([1])
    for i, r in enumerate(roots):
        m = mults[i] if i < len(mults) else 1
        for _ in range(m):
            p = p * UniPoly([-r, 1])
    for shift, gap in quadratics:
        p = p * UniPoly([shift * shift + gap, -2 * shift, 1])
    assert sturm_real_roots(p) == len(set(roots))


def test_sturm_over_quadratic_field():
    r2 = QSqrt2(0, 1)
    p = UniPoly([-r2, 0, 1])  # x^2 - sqrt 2
    assert sturm_real_roots(p) == 2


@pytest.mark.parametrize(
    "coeffs,expected",
    [
        ([1, -2, 1], True),
        ([1, 0, 0, 1], False),
        ([96, QSqrt2(0, Fraction(-278, 5)), -80, 0, 64], True),
        ([0, 0, 1], True),
        ([1, 0, -1], False),
        ([-1], False),
    ],
)
def test_globally_nonnegative_examples(coeffs, expected):
    assert globally_nonnegative(UniPoly(coeffs)) is expected


def test_globally_nonnegative_rejects_zero():
    with pytest.raises(ValueError):
        globally_nonnegative(UniPoly([0]))


def test_globally_nonnegative_odd_multiplicity_pairs():
    # (x-1)^3 (x+1)^3 has even degree and no squarefree-part sign change count trick saves it
    p = UniPoly([-1, 1]) ** 3 * UniPoly([1, 1]) ** 3
    assert not globally_nonnegative(p)
    assert globally_nonnegative(p * p)


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=5), st.lists(st.integers(-4, 4), min_size=1, max_size=3))
def test_globally_nonnegative_against_sympy(c1, c2):
    p = UniPoly(c1) * UniPoly(c1) + UniPoly(c2)
    if p.is_zero():
        return
    x = sympy.Symbol("x")
    expr = sum(sympy.Integer(int(c)) * x**i for i, c in enumerate(p.coeffs))
    poly = sympy.Poly(expr, x)
    if poly.degree() <= 0:
        truth = poly.LC() >= 0
    else:
        crit = [r for r in sympy.real_roots(poly.diff(x))] if poly.degree() > 1 else []
        truth = poly.degree() % 2 == 0 and poly.LC() > 0 and all(poly.eval(r) >= 0 for r in crit)
    assert globally_nonnegative(p) == bool(truth)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3), st.integers(1, 3), st.integers(1, 3))
def test_squarefree_decomposition_reassembles(base, m1, m2):
    p = UniPoly(base) ** m1 * UniPoly([1, 1]) ** m2
    if p.is_zero():
        return
    parts = squarefree_decomposition(p)
    rebuilt = UniPoly([1])
    for k, f in enumerate(parts, start=1):
        rebuilt = rebuilt * f ** k
    assert rebuilt.monic() == p.monic()


def test_unipoly_arithmetic():
    x = UniPoly.x()
    p = x * x - 1
    q, r = p.divmod(x - 1)
    assert q == x + 1 and r.is_zero()
    assert p.derivative() == 2 * x
    assert p(Fraction(3)) == 8
    assert p.degree == 2 and p.leading == 1


def test_quadext_json():
    assert QuadExt(Fraction(1, 2), Fraction(-3)).to_json() == {"a": "1/2", "b": "-3/1"}
