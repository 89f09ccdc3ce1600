"""The scalar and vector structure constants against independent oracles.

The oracle route never touches the summation formula: structure
constants are counted on explicit schemes at several concrete m and the
unique low-degree polynomial through those counts is recovered by
Lagrange interpolation.
"""

import itertools
from fractions import Fraction

import pytest

from schemefusion.core import cube, pointwise_max, pointwise_min, dominates, weight
from schemefusion.explicit import build_explicit, count_structure_constant
from schemefusion.johnson import (
    scalar_leading_term,
    scalar_structure_constant,
    triangle_positive,
    valency,
    vector_leading_term_bc_equal,
    vector_structure_constant,
)
from schemefusion.poly import LeadingTerm, Poly
from schemefusion.suites import johnson_lemma_suite


def lagrange_interpolate(points):
    """The unique polynomial through (x, y) pairs, by the Lagrange formula."""
    total = Poly.zero()
    for i, (xi, yi) in enumerate(points):
        term = Poly.constant(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term = term * Poly((-xj, 1)) * Fraction(1, xi - xj)
        total = total + term
    return total


def oracle_scalar(k, a, b, c, ms):
    counts = []
    for m in ms:
        scheme = build_explicit(k, 1, m)
        counts.append((m, count_structure_constant(scheme, (a,), (b,), (c,))))
    return lagrange_interpolate(counts)


def test_trivial_scheme_constant_is_m_minus_2():
    # four sample points pin any polynomial of degree <= 1 with room to spare
    assert oracle_scalar(1, 1, 1, 1, [3, 4, 5, 6]) == Poly((-2, 1))
    assert scalar_structure_constant(1, 1, 1, 1) == Poly((-2, 1))


def test_identity_relation_forces_equality():
    assert scalar_structure_constant(1, 1, 0, 1) == Poly.one()
    assert scalar_structure_constant(1, 0, 0, 1) == Poly.zero()
    assert scalar_structure_constant(1, 0, 0, 0) == Poly.one()


def test_johnson_k2_top_constant():
    expected = oracle_scalar(2, 2, 2, 2, [6, 7, 8, 9])
    p = scalar_structure_constant(2, 2, 2, 2)
    assert p == expected
    assert p == Poly((10, Fraction(-9, 2), Fraction(1, 2)))
    assert p.leading_term() == LeadingTerm(Fraction(1, 2), 2)


def test_all_k2_constants_match_oracle():
    for a, b, c in itertools.product(range(3), repeat=3):
        assert scalar_structure_constant(2, a, b, c) == oracle_scalar(2, a, b, c, [6, 7, 8])


def test_triangle_positive_examples():
    assert triangle_positive(2, 1, 1)
    assert not triangle_positive(3, 1, 1)
    assert triangle_positive((1, 0), (1, 1), (0, 1))


def test_positivity_iff_triangle_exhaustive():
    for k in range(1, 5):
        for a, b, c in itertools.product(range(k + 1), repeat=3):
            p = scalar_structure_constant(k, a, b, c)
            assert bool(p) == triangle_positive(a, b, c), (k, a, b, c)
            assert p.eventually_positive() == triangle_positive(a, b, c)


def test_leading_term_closed_form_exhaustive():
    for k in range(1, 5):
        for a, b, c in itertools.product(range(k + 1), repeat=3):
            if triangle_positive(a, b, c):
                assert (
                    scalar_leading_term(k, a, b, c)
                    == scalar_structure_constant(k, a, b, c).leading_term()
                ), (k, a, b, c)


def test_leading_term_rejects_triangle_violation():
    with pytest.raises(ValueError):
        scalar_leading_term(1, 1, 0, 0)


def test_leading_term_branch_values():
    # a >= b branch and a <= b branch at the top corner of k = 2
    assert scalar_leading_term(2, 2, 2, 2) == LeadingTerm(Fraction(1, 2), 2)
    assert scalar_leading_term(2, 0, 2, 2) == LeadingTerm(Fraction(1, 2), 2)


def test_degree_bound_with_equality_condition():
    for k in (1, 2):
        for d in (1, 2, 3):
            box = cube(k, d)
            for a, b, c in itertools.product(box, box, box):
                p = vector_structure_constant(k, a, b, c)
                if not p:
                    assert not triangle_positive(a, b, c)
                    continue
                bound = weight(pointwise_min(b, c))
                assert p.degree <= bound
                assert (p.degree == bound) == dominates(pointwise_max(b, c), a)


def test_vector_constant_examples():
    assert vector_structure_constant(1, (0, 1), (1, 0), (1, 1)) == Poly((-1, 1))
    assert vector_structure_constant(1, (0, 1), (1, 1), (0, 0)) == Poly.zero()
    z = (0, 0, 0)
    assert vector_structure_constant(1, z, z, z) == Poly.one()


def test_vector_constant_matches_explicit_counts():
    scheme4 = build_explicit(1, 2, 4)
    scheme5 = build_explicit(1, 2, 5)
    a, b, c = (0, 1), (1, 0), (1, 1)
    p = vector_structure_constant(1, a, b, c)
    assert p.evaluate(4) == count_structure_constant(scheme4, a, b, c)
    assert p.evaluate(5) == count_structure_constant(scheme5, a, b, c)


def test_vector_leading_term_display():
    assert vector_leading_term_bc_equal(1, (1, 1), (1, 1)) == LeadingTerm(Fraction(1), 2)
    assert vector_leading_term_bc_equal(1, (0, 1), (1, 1)) == LeadingTerm(Fraction(1), 2)
    assert vector_leading_term_bc_equal(2, (1,), (2,)) == LeadingTerm(Fraction(1, 2), 2)
    with pytest.raises(ValueError):
        vector_leading_term_bc_equal(1, (1, 1), (0, 1))


def test_vector_leading_term_agrees_with_product():
    for k in (1, 2):
        for d in (1, 2):
            box = cube(k, d)
            for a, b in itertools.product(box, box):
                if dominates(b, a):
                    assert (
                        vector_leading_term_bc_equal(k, a, b)
                        == vector_structure_constant(k, a, b, b).leading_term()
                    )


def test_symmetry_in_b_c():
    for k in (1, 2, 3):
        for a, b, c in itertools.product(range(k + 1), repeat=3):
            assert scalar_structure_constant(k, a, b, c) == scalar_structure_constant(k, a, c, b)


def test_row_sums_are_valencies():
    for k in (1, 2, 3):
        for a in range(k + 1):
            for b in range(k + 1):
                total = Poly.zero()
                for c in range(k + 1):
                    total = total + scalar_structure_constant(k, a, b, c)
                assert total == valency(k, b)


def test_valency_against_explicit_count():
    # valency of relation b is the count from the identity pair
    scheme = build_explicit(2, 1, 7)
    for b in range(3):
        assert valency(2, b).evaluate(7) == count_structure_constant(scheme, (0,), (b,), (b,))


def test_range_validation():
    with pytest.raises(ValueError):
        scalar_structure_constant(2, 3, 0, 0)
    with pytest.raises(ValueError):
        vector_structure_constant(1, (0, 1), (1,), (1, 1))


def test_full_lemma_suite_passes():
    report = johnson_lemma_suite(k_max=3, vector_k_max=2, vector_d_max=2)
    assert report["passed"], report["checks"]
