"""Vectors over the index cube [0,k]^d and componentwise operations on them.

An index vector is a plain tuple of ints.  Coordinates are 1-based in
documentation and I/O (supports, unit vectors, block structures); tuples
are indexed 0-based internally like any Python sequence.  Everything here
is immutable and safe to share between workers.  Desk scale means
k*d <= 64 or so; no operation here tries to stream or chunk.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Parameters:
    """Size parameters: subset size k, tensor power d, optional concrete m.

    m is None in generic (symbolic) mode.  A concrete m must satisfy
    m >= 3k; the symbolic structure constants are not trusted below that.
    """

    k: int
    d: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.m is not None and self.m < 3 * self.k:
            raise ValueError(f"concrete m must be >= 3k = {3 * self.k}, got {self.m}")

    @property
    def generic(self) -> bool:
        return self.m is None


def _check_same_length(a: Vec, b: Vec) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")


def weight(a: Vec) -> int:
    """Sum of the entries."""
    return sum(a)


def support(a: Vec) -> frozenset[int]:
    """1-based positions of the positive entries."""
    return frozenset(i + 1 for i, x in enumerate(a) if x > 0)


def dominates(b: Vec, a: Vec) -> bool:
    """True iff a_i <= b_i for every coordinate (b dominates a)."""
    _check_same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def abs_diff(a: Vec, b: Vec) -> Vec:
    _check_same_length(a, b)
    return tuple(abs(x - y) for x, y in zip(a, b))


def pointwise_min(a: Vec, b: Vec) -> Vec:
    _check_same_length(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def pointwise_max(a: Vec, b: Vec) -> Vec:
    _check_same_length(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def vector_factorial(a: Vec) -> int:
    """Product of entrywise factorials."""
    out = 1
    for x in a:
        out *= factorial(x)
    return out


def vector_binomial(a: Vec, b: Vec) -> int:
    """Product of entrywise binomials; zero unless 0 <= b <= a componentwise.

    Entries must be nonnegative (index vectors always are); the negative
    upper-argument extension of the binomial is deliberately not supported.
    """
    _check_same_length(a, b)
    out = 1
    for x, y in zip(a, b):
        if x < 0:
            raise ValueError(f"negative entry {x} in vector_binomial")
        if y < 0 or y > x:
            return 0
        out *= comb(x, y)
    return out


def down_set(a: Vec) -> tuple[Vec, ...]:
    """All vectors b <= a, in lexicographic order; size prod(a_i + 1)."""
    return tuple(itertools.product(*(range(x + 1) for x in a)))


def unit(i: int, d: int) -> Vec:
    """e_i, 1-based."""
    if not 1 <= i <= d:
        raise ValueError(f"unit index {i} out of range 1..{d}")
    return tuple(1 if j == i - 1 else 0 for j in range(d))


def zero_vector(d: int) -> Vec:
    return (0,) * d


def constant_vector(x: int, d: int) -> Vec:
    return (x,) * d


def cube(k: int, d: int) -> tuple[Vec, ...]:
    """All of [0,k]^d in lexicographic order."""
    return tuple(itertools.product(range(k + 1), repeat=d))


def weight_lex_key(a: Vec) -> tuple[int, Vec]:
    """Sort key placing light vectors first, lexicographic within a weight."""
    return (weight(a), a)


def check_vector(a: Vec, k: int, d: int) -> None:
    """Raise unless a lies in [0,k]^d."""
    if len(a) != d:
        raise ValueError(f"expected length {d}, got {a!r}")
    if any(not 0 <= x <= k for x in a):
        raise ValueError(f"entries of {a!r} not all in 0..{k}")


def iter_nonzero(k: int, d: int) -> Iterator[Vec]:
    z = zero_vector(d)
    return (a for a in cube(k, d) if a != z)
