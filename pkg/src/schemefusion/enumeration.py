"""Exhaustive search for fusion partitions at small (k, d).

Set partitions of the nonzero cube are walked depth first, building
cells in the order of their least element (elements ordered by weight
then lex), which is the block-by-block reading of restricted-growth
strings: every leaf corresponds to exactly one RGS, so the unpruned walk
visits exactly Bell(|cube| - 1) candidates.

Closing cells one at a time is what makes the pruning rule sound: once
a cell is closed it is a cell of every completion below that node, so a
fused-constant disagreement between two of its members, or between
members of an earlier closed cell tested against the new one, kills the
whole subtree.  Only fully closed cells are ever tested.

Polynomial identities are decided by exact multipoint evaluation: every
structure constant of J(m,k)^d has degree at most k*d, so two fused sums
agree as polynomials iff they agree at the k*d + 1 integer points
m = 3k .. 3k + k*d.  The search works on those integer value vectors
(fast, exact); the polynomial layer in fusion.py is the reference
semantics, and the test suite checks the two routes agree candidate by
candidate.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import json
import time
from dataclasses import dataclass, field

from .core import Vec, cube, weight_lex_key, zero_vector
from .fusion import FusionPartition, is_primitive
from .johnson import scalar_structure_constant
from .schemes import Classification, classify

ELEMENT_GUARD = 16


def bell_number(n: int) -> int:
    """Bell numbers via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


class GuardExceeded(ValueError):
    """Search space too large for an honest exhaustive run; pass force=True."""


def _sample_points(k: int, d: int, m: int | None) -> tuple[int, ...]:
    if m is not None:
        return (m,)
    return tuple(range(3 * k, 3 * k + k * d + 1))


_TABLE_CACHE: dict = {}


def _constant_table(k: int, d: int, points: tuple[int, ...]) -> dict[tuple[Vec, Vec, Vec], tuple[int, ...]]:
    """Every vector structure constant evaluated at the sample points.

    Values are exact integers (the polynomials are integer valued at
    integer arguments >= 3k, where they count triangles in a real scheme).
    Cached per process; subtree tasks at one (k, d) share the table.
    """
    cached = _TABLE_CACHE.get((k, d, points))
    if cached is not None:
        return cached
    box = cube(k, d)
    table: dict[tuple[Vec, Vec, Vec], tuple[int, ...]] = {}
    scalar_vals: dict[tuple[int, int, int], tuple[int, ...]] = {}
    for a in range(k + 1):
        for b in range(k + 1):
            for c in range(k + 1):
                p = scalar_structure_constant(k, a, b, c)
                vals = tuple(p.evaluate(m) for m in points)
                assert all(v.denominator == 1 for v in vals)
                scalar_vals[(a, b, c)] = tuple(int(v) for v in vals)
    npts = len(points)
    for a in box:
        for b in box:
            for c in box:
                acc = [1] * npts
                for x, y, z in zip(a, b, c):
                    sv = scalar_vals[(x, y, z)]
                    for i in range(npts):
                        acc[i] *= sv[i]
                    if not any(acc):
                        break
                table[(a, b, c)] = tuple(acc)
    _TABLE_CACHE[(k, d, points)] = table
    return table


@dataclass
class _SearchState:
    table: dict
    npts: int
    prune: bool
    candidates: int = 0
    nodes: int = 0
    valid: list[tuple[tuple[Vec, ...], ...]] = field(default_factory=list)
    memo: dict = field(default_factory=dict)

    def fused(self, a: Vec, beta: tuple[Vec, ...], gamma: tuple[Vec, ...]) -> tuple[int, ...]:
        """Fused value vector, memoized by cell content (symmetric in beta, gamma)."""
        if gamma < beta:
            beta, gamma = gamma, beta
        key = (a, beta, gamma)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        acc = [0] * self.npts
        table = self.table
        for b in beta:
            for c in gamma:
                for i, v in enumerate(table[(a, b, c)]):
                    acc[i] += v
        out = tuple(acc)
        self.memo[key] = out
        return out


def _cells_consistent(state: _SearchState, cells: list[tuple[Vec, ...]], t: int) -> bool:
    """Agreement check covering everything newly decided when cell t closes.

    The new cell is tested as alpha against every closed pair, and every
    earlier multi-member cell is tested against pairs involving the new
    cell; by induction each (alpha, {beta, gamma}) combination over closed
    cells is tested exactly once along a path, so a leaf that survived all
    checks is a valid fusion with no further work.
    """
    fused = state.fused
    new = cells[t]
    if len(new) > 1:
        a0 = new[0]
        for i in range(t + 1):
            for j in range(i, t + 1):
                ref = fused(a0, cells[i], cells[j])
                for a in new[1:]:
                    if fused(a, cells[i], cells[j]) != ref:
                        return False
    for alpha in cells[:t]:
        if len(alpha) < 2:
            continue
        a0 = alpha[0]
        for j in range(t + 1):
            ref = fused(a0, new, cells[j])
            for a in alpha[1:]:
                if fused(a, new, cells[j]) != ref:
                    return False
    return True


def _search(state: _SearchState, remaining: tuple[Vec, ...], cells: list[tuple[Vec, ...]]) -> None:
    state.nodes += 1
    if not remaining:
        state.candidates += 1
        if state.prune or _full_check(state, cells):
            state.valid.append(tuple(cells))
        return
    first, rest = remaining[0], remaining[1:]
    for size in range(len(rest) + 1):
        for tail in itertools.combinations(rest, size):
            new_cell = (first,) + tail
            cells.append(new_cell)
            if not state.prune or _cells_consistent(state, cells, len(cells) - 1):
                left = tuple(v for v in rest if v not in tail)
                _search(state, left, cells)
            cells.pop()


def _full_check(state: _SearchState, cells: list[tuple[Vec, ...]]) -> bool:
    fused = state.fused
    ncells = len(cells)
    for i in range(ncells):
        for j in range(i, ncells):
            for members in cells:
                if len(members) < 2:
                    continue
                ref = fused(members[0], cells[i], cells[j])
                for a in members[1:]:
                    if fused(a, cells[i], cells[j]) != ref:
                        return False
    return True


@dataclass(frozen=True)
class FusionRecord:
    partition: FusionPartition
    primitive: bool
    classification: Classification | None

    def to_dict(self) -> dict:
        return {
            "cells": self.partition.to_dict()["cells"],
            "primitive": self.primitive,
            "classification": self.classification.to_dict() if self.classification else None,
        }


@dataclass(frozen=True)
class EnumerationReport:
    k: int
    d: int
    m: int | None
    prune: bool
    primitive_only: bool
    candidates: int
    nodes: int
    records: tuple[FusionRecord, ...]
    wall_time: float
    forced: bool = False

    @property
    def valid_count(self) -> int:
        return len(self.records)

    @property
    def primitive_records(self) -> tuple[FusionRecord, ...]:
        return tuple(r for r in self.records if r.primitive)

    def to_dict(self) -> dict:
        """Serializable report; timings are omitted so reports are
        byte-identical across runs and worker counts."""
        return {
            "k": self.k,
            "d": self.d,
            "mode": "generic" if self.m is None else f"m={self.m}",
            "prune": self.prune,
            "primitive_only": self.primitive_only,
            "candidates_explored": self.candidates,
            "nodes_visited": self.nodes,
            "valid_count": self.valid_count,
            "primitive_count": len(self.primitive_records),
            "forced": self.forced,
            "fusions": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _ordered_elements(k: int, d: int) -> tuple[Vec, ...]:
    zero = zero_vector(d)
    return tuple(sorted((v for v in cube(k, d) if v != zero), key=weight_lex_key))


def _first_cell_tasks(elements: tuple[Vec, ...]) -> list[tuple[Vec, ...]]:
    first, rest = elements[0], elements[1:]
    tasks = []
    for size in range(len(rest) + 1):
        for tail in itertools.combinations(rest, size):
            tasks.append((first,) + tail)
    return tasks


def _run_subtree(args) -> tuple[int, int, list]:
    k, d, m, prune, first_cell, elements = args
    points = _sample_points(k, d, m)
    state = _SearchState(_constant_table(k, d, points), len(points), prune)
    identity_cell = (zero_vector(d),)
    cells = [identity_cell, first_cell]
    if not prune or _cells_consistent(state, cells, 1):
        left = tuple(v for v in elements if v not in first_cell)
        _search(state, left, cells)
    return state.candidates, state.nodes, state.valid


def enumerate_fusions(
    k: int,
    d: int,
    m: int | None = None,
    *,
    primitive_only: bool = False,
    prune: bool = True,
    force: bool = False,
    workers: int = 1,
) -> EnumerationReport:
    """Visit every partition of the nonzero cube and report the valid fusions.

    Generic mode (m None) decides validity as polynomial identities;
    numeric mode at one concrete m >= 3k.  Results are canonically sorted
    and deterministic across runs and worker counts.  The element guard
    refuses cubes with more than 16 nonzero elements unless force is set;
    a forced run is still exhaustive if it completes, but the guard is
    where honesty about desk scale lives.
    """
    if m is not None and m < 3 * k:
        raise ValueError(f"numeric mode needs m >= 3k = {3 * k}, got {m}")
    elements = _ordered_elements(k, d)
    n = len(elements)
    forced = n > ELEMENT_GUARD
    if forced and not force:
        raise GuardExceeded(
            f"{n} nonzero cube elements (> {ELEMENT_GUARD}); Bell({n}) = {bell_number(n)} "
            "candidates is beyond desk scale, pass force=True to run anyway"
        )
    t0 = time.perf_counter()
    tasks = [(k, d, m, prune, fc, elements) for fc in _first_cell_tasks(elements)]
    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_subtree, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [_run_subtree(t) for t in tasks]
    candidates = sum(r[0] for r in results)
    nodes = sum(r[1] for r in results)
    raw_valid = [cells for r in results for cells in r[2]]

    partitions = sorted(
        (FusionPartition.from_cells(k, d, cells) for cells in raw_valid),
        key=lambda p: p.cells,
    )
    records = []
    for part in partitions:
        primitive = is_primitive(part, m)
        if primitive_only and not primitive:
            continue
        classification = None
        if primitive and m is None:
            classification = classify(part, check=False)
        records.append(FusionRecord(part, primitive, classification))
    return EnumerationReport(
        k, d, m, prune, primitive_only, candidates, nodes, tuple(records),
        time.perf_counter() - t0, forced,
    )


@dataclass(frozen=True)
class TheoremReport:
    report: EnumerationReport
    outside: tuple[FusionRecord, ...]

    @property
    def passed(self) -> bool:
        return not self.outside

    def to_dict(self) -> dict:
        return {
            "k": self.report.k,
            "d": self.report.d,
            "passed": self.passed,
            "valid_count": self.report.valid_count,
            "primitive_count": len(self.report.primitive_records),
            "table": [
                {
                    "cells": r.partition.to_dict()["cells"],
                    "verdict": r.classification.verdict if r.classification else None,
                    "classification": r.classification.to_dict() if r.classification else None,
                }
                for r in self.report.primitive_records
            ],
            "outside": [r.to_dict() for r in self.outside],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def verify_theorem(k: int, d: int, *, force: bool = False, workers: int = 1) -> TheoremReport:
    """Enumerate, classify every primitive fusion, and flag any landing
    outside both intervals.

    An outside verdict is a falsification candidate and is reported with
    its full record, never dropped.
    """
    report = enumerate_fusions(k, d, force=force, workers=workers)
    outside = tuple(
        r for r in report.primitive_records
        if r.classification is not None and r.classification.verdict == "outside"
    )
    return TheoremReport(report, outside)


@dataclass(frozen=True)
class SmallMReport:
    k: int
    d: int
    m: int
    generic_valid: tuple[FusionPartition, ...]
    numeric_valid: tuple[FusionPartition, ...]
    numeric_only: tuple[FusionPartition, ...]

    @property
    def consistent(self) -> bool:
        """Generic validity must imply numeric validity at every m >= 3k."""
        numeric = set(self.numeric_valid)
        return all(p in numeric for p in self.generic_valid)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "m": self.m,
            "generic_valid_count": len(self.generic_valid),
            "numeric_valid_count": len(self.numeric_valid),
            "consistent": self.consistent,
            "numeric_only": [p.to_dict()["cells"] for p in self.numeric_only],
        }


def spot_check_small_m(k: int, d: int, m: int, *, force: bool = False) -> SmallMReport:
    """Compare numeric-mode fusions at one m against the generic list.

    Fusions valid only at this m are small-m coincidences; they are
    flagged without any classification claim.
    """
    if m < 3 * k:
        raise ValueError(f"m must be >= 3k = {3 * k}, got {m}")
    generic = enumerate_fusions(k, d, force=force)
    numeric = enumerate_fusions(k, d, m=m, force=force)
    generic_parts = tuple(r.partition for r in generic.records)
    numeric_parts = tuple(r.partition for r in numeric.records)
    generic_set = set(generic_parts)
    extras = tuple(p for p in numeric_parts if p not in generic_set)
    return SmallMReport(k, d, m, generic_parts, numeric_parts, extras)
