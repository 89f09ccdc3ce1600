"""Brute-force schemes on concrete vertex sets, plus 2-WL stabilization.

This module is the ground truth everything symbolic is checked against:
structure constants by direct counting over actual d-tuples of
k-subsets, connectivity by breadth-first search, stability by color
refinement.  Everything is exact and deliberately unclever; guards keep
vertex counts at desk scale (the counting guard admits a few thousand
vertices, the cubic WL loop far fewer).

Color compression in the WL loop keys a dict by the full signature
tuple; Python resolves hash collisions by comparing the signatures
themselves, so colors are never merged on a hash accident.  Signatures
are sorted before numbering, making the output colors canonical.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .core import Vec, cube, weight
from .fusion import FusionPartition, cell_connected
from .johnson import vector_structure_constant

VERTEX_GUARD = 5000
WL_GUARD = 700
DENSE_TABLE_LIMIT = 1500


class SchemeConsistencyError(RuntimeError):
    """A structure-constant count depended on the representative pair."""


class ExplicitScheme:
    """A concrete realization of J(m,k)^d, optionally fused by a partition.

    Vertices are d-tuples of k-subsets of {1..m}, encoded as tuples of
    subset indices; the pair color of (u, v) is the vector of setwise
    differences |u_i \\ v_i|, or the index of the cell containing it when
    a fusion partition is attached.
    """

    def __init__(self, k: int, d: int, m: int, partition: FusionPartition | None = None):
        if m < 3 * k:
            raise ValueError(f"m must be >= 3k = {3 * k}, got {m}")
        if partition is not None and (partition.k, partition.d) != (k, d):
            raise ValueError("partition parameters do not match the scheme")
        self.k, self.d, self.m = k, d, m
        self.partition = partition
        self.subsets = list(itertools.combinations(range(1, m + 1), k))
        nsub = len(self.subsets)
        if nsub**d > VERTEX_GUARD:
            raise ValueError(
                f"C({m},{k})^{d} = {nsub ** d} vertices exceeds the desk guard {VERTEX_GUARD}"
            )
        self._diff = [
            [k - len(set(si) & set(sj)) for sj in self.subsets] for si in self.subsets
        ]
        self.vertices = list(itertools.product(range(nsub), repeat=d))
        self.n = len(self.vertices)
        box = cube(k, d)
        self._vec_id = {v: i for i, v in enumerate(box)}
        self._id_vec = box
        if partition is not None:
            self._fuse_id = [partition.cell_of(v) for v in box]
        else:
            self._fuse_id = None
        self._table: list[list[int]] | None = None
        if self.n <= DENSE_TABLE_LIMIT:
            self._table = [[self._raw_id(u, v) for v in self.vertices] for u in self.vertices]

    def with_partition(self, partition: FusionPartition) -> "ExplicitScheme":
        """A fused view sharing this scheme's vertex and color tables."""
        if (partition.k, partition.d) != (self.k, self.d):
            raise ValueError("partition parameters do not match the scheme")
        clone = object.__new__(ExplicitScheme)
        clone.__dict__.update(self.__dict__)
        clone.partition = partition
        clone._fuse_id = [partition.cell_of(v) for v in self._id_vec]
        return clone

    def _raw_id(self, u: tuple[int, ...], v: tuple[int, ...]) -> int:
        diff = self._diff
        vec = tuple(diff[x][y] for x, y in zip(u, v))
        return self._vec_id[vec]

    def color_vector(self, ui: int, vi: int) -> Vec:
        """Raw difference pattern of a vertex pair, as an index vector."""
        if self._table is not None:
            return self._id_vec[self._table[ui][vi]]
        return self._id_vec[self._raw_id(self.vertices[ui], self.vertices[vi])]

    def color(self, ui: int, vi: int) -> int:
        """Pair color id: raw vector id, or cell id when fused."""
        raw = (
            self._table[ui][vi]
            if self._table is not None
            else self._raw_id(self.vertices[ui], self.vertices[vi])
        )
        return raw if self._fuse_id is None else self._fuse_id[raw]

    @property
    def num_colors(self) -> int:
        # every pattern in [0,k]^d occurs once m >= 3k, so no occupancy scan
        if self.partition is not None:
            return self.partition.num_cells
        return len(self._id_vec)


def build_explicit(k: int, d: int, m: int, partition: FusionPartition | None = None) -> ExplicitScheme:
    return ExplicitScheme(k, d, m, partition)


def _pairs_with_color(scheme: ExplicitScheme, a: Vec, limit: int, rng: random.Random | None):
    """Up to `limit` vertex pairs whose raw color is a; sampled when an rng
    is supplied, first found otherwise."""
    found: list[tuple[int, int]] = []
    seen = 0
    for u in range(scheme.n):
        for v in range(scheme.n):
            if scheme.color_vector(u, v) == a:
                seen += 1
                if rng is None:
                    found.append((u, v))
                    if len(found) >= limit:
                        return found
                else:
                    if len(found) < limit:
                        found.append((u, v))
                    else:
                        j = rng.randrange(seen)
                        if j < limit:
                            found[j] = (u, v)
    return found


def count_structure_constant(
    scheme: ExplicitScheme, a: Vec, b: Vec, c: Vec, rng: random.Random | None = None
) -> int:
    """Count w with color(u,w) = b and color(w,v) = c over a pair of color a.

    Three representative pairs are counted and compared; a disagreement
    means the pair coloring is not a scheme at all and raises.
    """
    if scheme.partition is not None:
        raise ValueError("structure constants are counted on the unfused scheme")
    a, b, c = tuple(a), tuple(b), tuple(c)
    reps = _pairs_with_color(scheme, a, 3, rng)
    if not reps:
        raise ValueError(f"no vertex pair has color {a}")
    counts = []
    for u, v in reps:
        counts.append(
            sum(
                1
                for w in range(scheme.n)
                if scheme.color_vector(u, w) == b and scheme.color_vector(w, v) == c
            )
        )
    if len(set(counts)) != 1:
        raise SchemeConsistencyError(
            f"count for ({a},{b},{c}) depends on the representative: {counts}"
        )
    return counts[0]


def explicit_connectivity(scheme: ExplicitScheme, cell: int) -> bool:
    """BFS connectivity of the graph whose edges are the pairs colored `cell`."""
    if scheme.partition is None:
        raise ValueError("connectivity is asked of a fused scheme cell")
    n = scheme.n
    seen = [False] * n
    seen[0] = True
    queue = [0]
    reached = 1
    while queue:
        u = queue.pop()
        for v in range(n):
            if not seen[v] and scheme.color(u, v) == cell:
                seen[v] = True
                reached += 1
                queue.append(v)
    return reached == n


# ---------------------------------------------------------------------------
# pair colorings and Weisfeiler-Leman refinement


@dataclass(frozen=True)
class PairColoring:
    """A partition of ordered vertex pairs into color classes.

    colors[u][v] is a dense id in 0..num_colors-1.  The diagonal must be
    a union of classes disjoint from the off-diagonal classes; that is
    the minimum structure 2-WL preserves.  rounds records how many
    refining rounds produced this coloring (0 for a fresh or already
    stable one).
    """

    n: int
    colors: tuple[tuple[int, ...], ...]
    num_colors: int
    rounds: int = 0

    def __post_init__(self):
        diag = {self.colors[u][u] for u in range(self.n)}
        off = {
            self.colors[u][v]
            for u in range(self.n)
            for v in range(self.n)
            if u != v
        }
        if diag & off:
            raise ValueError("diagonal and off-diagonal pairs share a color")

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.num_colors
        for row in self.colors:
            for c in row:
                sizes[c] += 1
        return sizes

    def is_symmetric(self) -> bool:
        """Whether color(u,v) = color(v,u) everywhere.

        Refinement can split a symmetric class into a transposed pair of
        antisymmetric classes; this is how that is tracked.
        """
        return all(
            self.colors[u][v] == self.colors[v][u]
            for u in range(self.n)
            for v in range(u + 1, self.n)
        )


def _compress(raw: list[list]) -> tuple[tuple[tuple[int, ...], ...], int]:
    palette = sorted({sig for row in raw for sig in row})
    index = {sig: i for i, sig in enumerate(palette)}
    return tuple(tuple(index[sig] for sig in row) for row in raw), len(palette)


def coloring_from_scheme(scheme: ExplicitScheme) -> PairColoring:
    """The pair coloring of a scheme (fused cells or raw difference patterns)."""
    n = scheme.n
    raw = [[scheme.color(u, v) for v in range(n)] for u in range(n)]
    colors, num = _compress(raw)
    return PairColoring(n, colors, num)


def graph_coloring(scheme: ExplicitScheme, edge_weight: int = 1) -> PairColoring:
    """Three colors: diagonal, pairs of difference weight `edge_weight`, rest.

    With weight 1 the edge class is the Cameron graph of the scheme (the
    Johnson graph when d = 1, the Hamming graph when k = 1).
    """
    n = scheme.n
    raw = []
    for u in range(n):
        row = []
        for v in range(n):
            if u == v:
                row.append(0)
            elif weight(scheme.color_vector(u, v)) == edge_weight:
                row.append(1)
            else:
                row.append(2)
        raw.append(row)
    colors, num = _compress(raw)
    return PairColoring(n, colors, num)


def wl_closure(coloring: PairColoring) -> PairColoring:
    """Two-dimensional Weisfeiler-Leman stabilization.

    Each round recolors (u, v) by its old color together with the sorted
    multiset over w of the color pairs (c(u,w), c(w,v)), then compresses
    signatures to dense ids.  The loop stops at the first round that
    splits nothing; that final pass doubles as the verification that the
    output is coherent, i.e. that every two-step color composition count
    is representative independent.
    """
    n = coloring.n
    if n > WL_GUARD:
        raise ValueError(f"{n} vertices exceeds the WL guard {WL_GUARD}")
    colors = coloring.colors
    num = coloring.num_colors
    rounds = 0
    while True:
        raw = []
        for u in range(n):
            cu = colors[u]
            row = []
            for v in range(n):
                sig = sorted((cu[w], colors[w][v]) for w in range(n))
                row.append((cu[v], tuple(sig)))
            raw.append(row)
        new_colors, new_num = _compress(raw)
        if new_num == num:
            return PairColoring(n, colors, num, rounds)
        colors, num = new_colors, new_num
        rounds += 1


def refines_coloring(fine: PairColoring, coarse: PairColoring) -> bool:
    """Whether `fine` refines `coarse` as a partition of ordered pairs."""
    if fine.n != coarse.n:
        raise ValueError("colorings live on different vertex sets")
    mapped: dict[int, int] = {}
    for u in range(fine.n):
        for v in range(fine.n):
            f, c = fine.colors[u][v], coarse.colors[u][v]
            if mapped.setdefault(f, c) != c:
                return False
    return True


def colorings_equal_as_partitions(x: PairColoring, y: PairColoring) -> bool:
    """Class-for-class equality, ignoring the numbering of colors."""
    return refines_coloring(x, y) and refines_coloring(y, x)


# ---------------------------------------------------------------------------
# cross validation


@dataclass(frozen=True)
class CrossValidateReport:
    k: int
    d: int
    m: int
    triples_checked: int
    count_mismatches: tuple[tuple, ...]
    fusion_cells_checked: int
    connectivity_mismatches: tuple[tuple, ...]

    @property
    def passed(self) -> bool:
        return not self.count_mismatches and not self.connectivity_mismatches

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "m": self.m,
            "triples_checked": self.triples_checked,
            "count_mismatches": [list(map(str, t)) for t in self.count_mismatches],
            "fusion_cells_checked": self.fusion_cells_checked,
            "connectivity_mismatches": [list(map(str, t)) for t in self.connectivity_mismatches],
            "passed": self.passed,
        }


def cross_validate(
    k: int,
    d: int,
    m: int,
    fusions: Sequence[FusionPartition] = (),
    rng: random.Random | None = None,
) -> CrossValidateReport:
    """Symbolic constants against brute-force counts, exhaustively over
    all index triples, and index-level connectivity against BFS for the
    supplied fusions.  Every mismatch is reported with both values.
    """
    scheme = build_explicit(k, d, m)
    box = cube(k, d)
    count_bad = []
    reps_by_color = {a: _pairs_with_color(scheme, a, 3, rng) for a in box}
    for a in box:
        reps = reps_by_color[a]
        if not reps:
            raise ValueError(f"no vertex pair has color {a} at m={m}")
        for b in box:
            for c in box:
                counts = []
                for u, v in reps:
                    counts.append(
                        sum(
                            1
                            for w in range(scheme.n)
                            if scheme.color_vector(u, w) == b
                            and scheme.color_vector(w, v) == c
                        )
                    )
                if len(set(counts)) != 1:
                    raise SchemeConsistencyError(
                        f"count for ({a},{b},{c}) depends on the representative: {counts}"
                    )
                expected = vector_structure_constant(k, a, b, c).evaluate(m)
                if counts[0] != expected:
                    count_bad.append((a, b, c, counts[0], expected))
    cells_checked = 0
    conn_bad = []
    for part in fusions:
        fused = scheme.with_partition(part)
        for alpha in part.nonidentity_indices():
            cells_checked += 1
            by_index = cell_connected(part, alpha, m)
            by_graph = explicit_connectivity(fused, alpha)
            if by_index != by_graph:
                conn_bad.append((part.to_json(), alpha, by_index, by_graph))
    return CrossValidateReport(
        k, d, m, len(box) ** 3, tuple(count_bad), cells_checked, tuple(conn_bad)
    )
