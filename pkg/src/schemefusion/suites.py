"""Executable property suites over the closed forms and cell structure.

These are the machine-checkable statements behind the library: the
positivity criterion and leading-term closed forms for scalar constants,
the degree bound and leading-term display for vector constants, and the
four-part cell-structure proposition with its corollaries on every valid
fusion at a battery of small (k, d).  The CLI's verify-lemmas subcommand
and the test suite both run these.
"""

from __future__ import annotations

import itertools

from .core import cube, dominates, pointwise_max, pointwise_min, support, weight
from .fusion import (
    analyze_cell,
    domination_preorder,
    down_closure,
    max_weight_subset,
    set_weight,
    verify_key_prop,
)
from .core import vector_factorial, zero_vector
from .johnson import (
    scalar_leading_term,
    scalar_structure_constant,
    triangle_positive,
    valency,
    vector_leading_term_bc_equal,
    vector_structure_constant,
)


def johnson_lemma_suite(k_max: int = 4, vector_k_max: int = 2, vector_d_max: int = 3) -> dict:
    """Exhaustive checks of the scalar and vector closed forms.

    Scalar, all k <= k_max: positivity iff triangle inequality, closed
    leading term equals the computed one, symmetry in b and c, and the
    row-sum identity sum_c p^a_{b,c} = valency(b).  Vector, k <=
    vector_k_max and d <= vector_d_max: degree bounded by wt(min(b,c))
    with equality iff a <= max(b,c), and the product leading-term display
    at b = c with a below b.
    """
    checks: dict[str, bool] = {}

    pos_ok = lt_ok = sym_ok = row_ok = True
    for k in range(1, k_max + 1):
        rng = range(k + 1)
        for a, b, c in itertools.product(rng, rng, rng):
            p = scalar_structure_constant(k, a, b, c)
            if p.eventually_positive() != triangle_positive(a, b, c):
                pos_ok = False
            if bool(p) != triangle_positive(a, b, c):
                pos_ok = False
            if p and scalar_leading_term(k, a, b, c) != p.leading_term():
                lt_ok = False
            if p != scalar_structure_constant(k, a, c, b):
                sym_ok = False
        for a, b in itertools.product(rng, rng):
            total = scalar_structure_constant(k, a, b, 0)
            for c in range(1, k + 1):
                total = total + scalar_structure_constant(k, a, b, c)
            if total != valency(k, b):
                row_ok = False
    checks["scalar positivity iff triangle inequality"] = pos_ok
    checks["scalar leading term closed form"] = lt_ok
    checks["scalar symmetry in b, c"] = sym_ok
    checks["scalar row sums equal valencies"] = row_ok

    deg_ok = disp_ok = True
    for k in range(1, vector_k_max + 1):
        for d in range(1, vector_d_max + 1):
            box = cube(k, d)
            for a, b, c in itertools.product(box, box, box):
                p = vector_structure_constant(k, a, b, c)
                bound = weight(pointwise_min(b, c))
                if p:
                    if p.degree > bound:
                        deg_ok = False
                    if (p.degree == bound) != dominates(pointwise_max(b, c), a):
                        deg_ok = False
                if dominates(b, a):
                    expect = vector_leading_term_bc_equal(k, a, b)
                    got = vector_structure_constant(k, a, b, b).leading_term()
                    if expect != got:
                        disp_ok = False
    checks["vector degree bound and equality condition"] = deg_ok
    checks["vector leading term display at b = c"] = disp_ok

    return {"checks": checks, "passed": all(checks.values())}


DEFAULT_FUSION_CASES: tuple[tuple[int, int], ...] = ((1, 1), (1, 2), (2, 1), (3, 1))


def fusion_property_suite(cases: tuple[tuple[int, int], ...] = DEFAULT_FUSION_CASES) -> dict:
    """Cell-structure checks on every valid fusion of the given (k, d).

    For each valid fusion: the four-part proposition on every cell, the
    self-count N^beta_beta = 1, constancy of a! over each maximal-weight
    subset, the equivalence of positive domination counts with the
    domination preorder, and the minimal-cell corollary (the down-closure
    adds only the zero vector, maximal members have disjoint equal-size
    supports, and the cell has weight one or corners-only maxima).
    """
    from .enumeration import enumerate_fusions

    keyprop_ok = selfcount_ok = factorial_ok = preorder_ok = minimal_ok = True
    fusions_seen = 0
    for k, d in cases:
        report = enumerate_fusions(k, d)
        for record in report.records:
            part = record.partition
            fusions_seen += 1
            pre = domination_preorder(part)
            for beta in range(part.num_cells):
                kp = verify_key_prop(part, beta, check_valid=False)
                if not kp.passed:
                    keyprop_ok = False
                analysis = analyze_cell(part, beta)
                if analysis.count(beta) != 1:
                    selfcount_ok = False
                facts = {vector_factorial(v) for v in analysis.max_weight_elements}
                if len(facts) != 1:
                    factorial_ok = False
                for alpha in range(part.num_cells):
                    n = analysis.count(alpha)
                    if n is None or (n > 0) != pre.precedes(alpha, beta):
                        preorder_ok = False
            for alpha in pre.minimal:
                star = max_weight_subset(part.cells[alpha])
                closure = down_closure(star)
                if closure != set(part.cells[alpha]) | {zero_vector(d)}:
                    minimal_ok = False
                sups = [support(v) for v in star]
                if any(s & t for i, s in enumerate(sups) for t in sups[i + 1 :]):
                    minimal_ok = False
                if len({len(s) for s in sups}) != 1:
                    minimal_ok = False
                w = set_weight(part.cells[alpha])
                if w != 1 and not all(x in (0, k) for v in star for x in v):
                    minimal_ok = False
    checks = {
        "four-part cell proposition on all valid fusions": keyprop_ok,
        "self domination count is 1": selfcount_ok,
        "factorial constant on maximal-weight subsets": factorial_ok,
        "positive domination count iff preorder": preorder_ok,
        "minimal-cell corollary": minimal_ok,
    }
    return {"checks": checks, "passed": all(checks.values()), "fusions_checked": fusions_seen}
