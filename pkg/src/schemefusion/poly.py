"""Dense univariate polynomials over exact rationals.

The variable is the symbolic point count m.  Coefficients are
fractions.Fraction, index = exponent, no trailing zeros (the zero
polynomial is the empty coefficient tuple).  All arithmetic is exact;
equality is coefficientwise equality in this canonical form, which is
what "equal for all sufficiently large m" means for polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, NamedTuple, Union

Scalar = Union[int, Fraction]


class LeadingTerm(NamedTuple):
    coefficient: Fraction
    exponent: int


class Poly:
    """Immutable polynomial in one variable with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls) -> "Poly":
        return _ZERO

    @classmethod
    def one(cls) -> "Poly":
        return _ONE

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        """The monomial m."""
        return _X

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    @property
    def degree(self) -> int | float:
        """Degree; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def leading_term(self) -> LeadingTerm:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading term")
        return LeadingTerm(self.coeffs[-1], len(self.coeffs) - 1)

    def eventually_positive(self) -> bool:
        """True iff the polynomial is positive for all sufficiently large m."""
        return bool(self.coeffs) and self.coeffs[-1] > 0

    def evaluate(self, m: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc

    def to_fraction_strings(self) -> list[str]:
        """Coefficients as "num/den" strings, constant term first."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_fraction_strings(cls, strings: Iterable[str]) -> "Poly":
        return cls(Fraction(s) for s in strings)

    def to_text(self, var: str = "m") -> str:
        """Human-readable rendering, highest power first."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for exp in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[exp]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if exp == 0:
                body = _frac_text(mag)
            else:
                power = var if exp == 1 else f"{var}^{exp}"
                body = power if mag == 1 else f"{_frac_text(mag)}{power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"({c.numerator}/{c.denominator})"


_ZERO = Poly(())
_ONE = Poly((1,))
_X = Poly((0, 1))


def binomial_in_m(shift: int, t: int) -> Poly:
    """C(m + shift, t) as a degree-t polynomial in m.

    The product (m+shift)(m+shift-1)...(m+shift-t+1) / t!; t = 0 gives 1.
    Evaluating at an integer m with m + shift >= t reproduces the integer
    binomial coefficient.
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    out = _ONE
    for j in range(t):
        out = out * Poly((shift - j, 1))
    return out * Fraction(1, factorial(t))


def evaluate_binomial(shift: int, t: int, m: int) -> int:
    """Integer value of C(m + shift, t); companion to binomial_in_m."""
    return comb(m + shift, t)
