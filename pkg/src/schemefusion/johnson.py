"""Structure constants of the Johnson scheme J(m,k) and its tensor powers.

The scalar constant p^a_{b,c}(m) counts, for a fixed pair of k-subsets
u, v of an m-set with |u \\ v| = a, the k-subsets w with |u \\ w| = b and
|w \\ v| = c.  It is computed exactly as a polynomial in m:

    p^a_{b,c}(m) = sum_i C(k-a,i) C(a,k-b-i) C(a,k-c-i) C(m-k-a, b+c+i-k)

with i running over max(0, k-a-b, k-b-c, k-a-c) <= i <= min(k-a, k-b, k-c).
The further cap i <= m-a-b-c never binds once m >= 3k, so the symbolic sum
drops it; evaluating the returned polynomials below m = 3k is undefined
behavior.  The d-fold tensor power constant is the product over
coordinates.

The constant is nonzero exactly when |b-c| <= a <= b+c, in which case its
leading coefficient is positive; the closed leading-term forms are
implemented separately so the two routes can be checked against each
other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .core import (
    Vec,
    dominates,
    vector_binomial,
    vector_factorial,
    weight,
)
from .poly import LeadingTerm, Poly, binomial_in_m


def _check_scalar(k: int, *vals: int) -> None:
    for v in vals:
        if not 0 <= v <= k:
            raise ValueError(f"index {v} out of range 0..{k}")


@lru_cache(maxsize=None)
def scalar_structure_constant(k: int, a: int, b: int, c: int) -> Poly:
    """p^a_{b,c}(m) for J(m,k), exact in m."""
    _check_scalar(k, a, b, c)
    lo = max(0, k - a - b, k - b - c, k - a - c)
    hi = min(k - a, k - b, k - c)
    total = Poly.zero()
    for i in range(lo, hi + 1):
        factor = comb(k - a, i) * comb(a, k - b - i) * comb(a, k - c - i)
        if factor:
            total = total + binomial_in_m(-k - a, b + c + i - k) * factor
    return total


def triangle_positive(a, b, c) -> bool:
    """|b-c| <= a <= b+c, componentwise for vectors."""
    if isinstance(a, tuple):
        return all(abs(y - z) <= x <= y + z for x, y, z in zip(a, b, c))
    return abs(b - c) <= a <= b + c


def scalar_leading_term(k: int, a: int, b: int, c: int) -> LeadingTerm:
    """Closed form for the leading term of p^a_{b,c}(m).

    Requires the triangle condition.  Inputs with b < c are swapped first
    (the constant is symmetric in b, c); at a = b the two branches of the
    closed form coincide, which is asserted rather than assumed.
    """
    _check_scalar(k, a, b, c)
    if not triangle_positive(a, b, c):
        raise ValueError(f"triangle inequality fails for (a,b,c)=({a},{b},{c})")
    if b < c:
        b, c = c, b
    high = low = None
    if a >= b:
        high = LeadingTerm(
            Fraction(comb(a, b) * comb(a, c), vector_factorial((b + c - a,))),
            b + c - a,
        )
    if a <= b:
        low = LeadingTerm(
            Fraction(comb(k - a, k - b) * comb(a, b - c), vector_factorial((c,))),
            c,
        )
    if high is not None and low is not None:
        assert high == low, f"branch mismatch at a=b: {high} vs {low}"
    return high if high is not None else low  # type: ignore[return-value]


@lru_cache(maxsize=None)
def vector_structure_constant(k: int, a: Vec, b: Vec, c: Vec) -> Poly:
    """p^a_{b,c}(m) for J(m,k)^d: the product of the scalar constants."""
    if not len(a) == len(b) == len(c):
        raise ValueError("index vectors must share a length")
    total = Poly.one()
    for x, y, z in zip(a, b, c):
        factor = scalar_structure_constant(k, x, y, z)
        if not factor:
            return Poly.zero()
        total = total * factor
    return total


def vector_leading_term_bc_equal(k: int, a: Vec, b: Vec) -> LeadingTerm:
    """Leading term of p^a_{b,b}(m) when a <= b componentwise.

    The closed form is the product of k-complement binomials divided by
    the entrywise factorial of b, with exponent wt(b).
    """
    if not dominates(b, a):
        raise ValueError(f"{a} is not dominated by {b}")
    top = tuple(k - x for x in a)
    bot = tuple(k - x for x in b)
    coeff = Fraction(vector_binomial(top, bot), vector_factorial(b))
    return LeadingTerm(coeff, weight(b))


def valency(k: int, b: int) -> Poly:
    """Valency of relation b of J(m,k): p^0_{b,b}(m) = C(k,b) C(m-k,b)."""
    return scalar_structure_constant(k, 0, b, b)


def vector_valency(k: int, b: Vec) -> Poly:
    total = Poly.one()
    for y in b:
        total = total * valency(k, y)
    return total
