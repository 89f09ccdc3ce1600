import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
import hypothesis.strategies as st

from schemefusion.poly import LeadingTerm, Poly, binomial_in_m


def polys():
    coeff = st.one_of(st.integers(-6, 6), st.fractions(min_value=-6, max_value=6, max_denominator=4))
    return st.lists(coeff, max_size=5).map(Poly)


def test_product_expansion():
    m_minus_1 = Poly((-1, 1))
    m_minus_2 = Poly((-2, 1))
    assert m_minus_1 * m_minus_2 == Poly((2, -3, 1))


def test_add_identity_and_scale():
    p = Poly((1, 2, 3))
    assert p + Poly.zero() == p
    assert Fraction(1, 2) * Poly((0, 2)) == Poly((0, 1))


def test_canonical_form_strips_trailing_zeros():
    assert Poly((1, 0, 0)).coeffs == (Fraction(1),)
    assert Poly((0, 0)).coeffs == ()
    assert not Poly(())


def test_binomial_in_m_examples():
    assert binomial_in_m(-2, 1) == Poly((-2, 1))
    assert binomial_in_m(0, 2) == Poly((0, Fraction(-1, 2), Fraction(1, 2)))
    assert binomial_in_m(-3, 0) == Poly.one()


def test_evaluate_examples():
    assert Poly((2, -3, 1)).evaluate(5) == 12
    assert Poly.zero().evaluate(17) == 0
    assert binomial_in_m(-2, 1).evaluate(7) == 5


def test_leading_term_and_degree():
    p = Poly((0, 1, Fraction(1, 2)))
    assert p.leading_term() == LeadingTerm(Fraction(1, 2), 2)
    assert Poly((7,)).leading_term() == LeadingTerm(Fraction(7), 0)
    assert Poly((7,)).degree == 0
    assert Poly.zero().degree == float("-inf")
    with pytest.raises(ValueError):
        Poly.zero().leading_term()


def test_eventually_positive():
    assert Poly((-2, 1)).eventually_positive()
    assert not Poly.zero().eventually_positive()
    assert not Poly((5, -1)).eventually_positive()


def test_serialization_roundtrip():
    p = Poly((Fraction(10), Fraction(-9, 2), Fraction(1, 2)))
    strings = p.to_fraction_strings()
    assert strings == ["10/1", "-9/2", "1/2"]
    assert Poly.from_fraction_strings(strings) == p


def test_text_rendering():
    assert Poly((2, -3, 1)).to_text() == "m^2 - 3m + 2"
    assert Poly((0, Fraction(1, 2))).to_text() == "(1/2)m"
    assert Poly.zero().to_text() == "0"


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@given(polys(), polys())
def test_degree_of_product(p, q):
    if p and q:
        assert (p * q).degree == p.degree + q.degree


@given(polys(), st.integers(-20, 20))
def test_evaluation_is_a_homomorphism(p, m):
    q = Poly((3, -1, 2))
    assert (p + q).evaluate(m) == p.evaluate(m) + q.evaluate(m)
    assert (p * q).evaluate(m) == p.evaluate(m) * q.evaluate(m)


def test_binomial_in_m_matches_integer_binomials():
    rng = random.Random(20240817)
    for _ in range(50):
        s = rng.randint(-6, 6)
        t = rng.randint(0, 6)
        m = rng.randint(max(0, t - s), t - s + 30)
        assert binomial_in_m(s, t).evaluate(m) == comb(m + s, t)
