"""Exact fusion-scheme search for tensor powers of Johnson schemes.

The library computes structure constants of J(m,k)^d as exact
polynomials in m, decides which partitions of the index cube [0,k]^d
fuse the tensor power into an association scheme, tests primitivity,
classifies primitive fusions into the symmetrized-power and Hamming
intervals, enumerates all fusions at small (k, d), and cross-checks the
symbolic machinery against brute-force computations on concrete vertex
sets, including 2-WL stabilization.
"""

from .core import Parameters, Vec
from .enumeration import enumerate_fusions, spot_check_small_m, verify_theorem
from .explicit import build_explicit, count_structure_constant, cross_validate, wl_closure
from .fusion import (
    FusionPartition,
    analyze_cell,
    fused_structure_constant,
    is_primitive,
    is_valid_fusion,
    verify_key_prop,
)
from .johnson import (
    scalar_leading_term,
    scalar_structure_constant,
    triangle_positive,
    vector_leading_term_bc_equal,
    vector_structure_constant,
)
from .poly import LeadingTerm, Poly, binomial_in_m
from .schemes import (
    BlockStructure,
    Classification,
    cameron_partition,
    classify,
    discrete_partition,
    hamming_block_partition,
    trivial_block_partition,
)

__all__ = [
    "Parameters",
    "Vec",
    "Poly",
    "LeadingTerm",
    "binomial_in_m",
    "scalar_structure_constant",
    "scalar_leading_term",
    "vector_structure_constant",
    "vector_leading_term_bc_equal",
    "triangle_positive",
    "FusionPartition",
    "fused_structure_constant",
    "is_valid_fusion",
    "is_primitive",
    "analyze_cell",
    "verify_key_prop",
    "BlockStructure",
    "Classification",
    "discrete_partition",
    "cameron_partition",
    "trivial_block_partition",
    "hamming_block_partition",
    "classify",
    "enumerate_fusions",
    "verify_theorem",
    "spot_check_small_m",
    "build_explicit",
    "count_structure_constant",
    "cross_validate",
    "wl_closure",
]

__version__ = "0.1.0"
