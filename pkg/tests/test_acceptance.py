"""End-to-end acceptance criteria for the library.

Each test prints one pass/fail line (visible under pytest -s) and
asserts exactly what it prints.  All comparisons are exact: integer
equality against brute-force counts, coefficientwise equality of
polynomials, class-for-class equality of pair partitions.

On primitivity of the finest partition: at d >= 2 it renders the tensor
power itself, whose single-coordinate relations are disconnected
graphs, so it is imprimitive.  Criterion 3 asserts that and backs it
with the BFS oracle; criterion 7 would fail under the opposite choice.
"""

import time

from schemefusion.enumeration import enumerate_fusions, verify_theorem
from schemefusion.explicit import (
    build_explicit,
    coloring_from_scheme,
    colorings_equal_as_partitions,
    cross_validate,
    explicit_connectivity,
    graph_coloring,
    refines_coloring,
    wl_closure,
)
from schemefusion.fusion import (
    FusionPartition,
    analyze_cell,
    cell_connected,
    verify_key_prop,
)
from schemefusion.schemes import cameron_partition, cameron_refinement_holds, hamming_witnesses
from schemefusion.suites import johnson_lemma_suite


def _report(number: int, ok: bool, detail: str) -> None:
    print(f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {number}: {detail}"


def test_criterion_1_oracle_equality():
    t0 = time.perf_counter()
    cases = [(1, d, m) for d in (1, 2, 3) for m in (3, 4, 5)]
    cases += [(2, 1, m) for m in (6, 7, 8, 9)]
    triples = 0
    for k, d, m in cases:
        rep = cross_validate(k, d, m)
        assert rep.passed, (k, d, m, rep.count_mismatches[:3])
        triples += rep.triples_checked
    elapsed = time.perf_counter() - t0
    _report(
        1,
        elapsed < 120,
        f"symbolic constants equal brute-force counts on {len(cases)} schemes, "
        f"{triples} triples, exact ({elapsed:.1f}s)",
    )


def test_criterion_2_lemma_suite():
    t0 = time.perf_counter()
    rep = johnson_lemma_suite(k_max=4, vector_k_max=2, vector_d_max=3)
    failed = [name for name, ok in rep["checks"].items() if not ok]
    _report(
        2,
        rep["passed"],
        f"closed-form suites exhaustive to k=4 scalar, k=2/d=3 vector "
        f"({time.perf_counter() - t0:.1f}s)" + (f"; failed: {failed}" if failed else ""),
    )


def test_criterion_3_enumeration_ground_truth():
    report = enumerate_fusions(1, 2)
    failures = []
    if report.valid_count != 5:
        failures.append(f"expected 5 valid fusions, got {report.valid_count}")

    wreath = FusionPartition.from_cells(1, 2, [[[0, 0]], [[1, 0]], [[0, 1], [1, 1]]])
    wreath_swap = FusionPartition.from_cells(1, 2, [[[0, 0]], [[0, 1]], [[1, 0], [1, 1]]])
    tensor_square = FusionPartition.from_cells(1, 2, [[[0, 0]], [[0, 1]], [[1, 0]], [[1, 1]]])
    weight_fusion = cameron_partition(1, 2)
    coarse = FusionPartition.from_cells(1, 2, [[[0, 0]], [[0, 1], [1, 0], [1, 1]]])
    by_partition = {r.partition: r for r in report.records}
    if set(by_partition) != {wreath, wreath_swap, tensor_square, weight_fusion, coarse}:
        failures.append("valid fusion list is not the expected five partitions")

    # wreath pair: valid and imprimitive
    for w in (wreath, wreath_swap):
        if by_partition[w].primitive:
            failures.append(f"wreath partition {w.cells} reported primitive")

    # interval membership of the named three: tensor square and the
    # weight fusion sit over singleton blocks, the coarse fusion over one block
    if not (cameron_refinement_holds(tensor_square)
            and {bs.e for bs in hamming_witnesses(tensor_square)} == {1}):
        failures.append("tensor square not in the e=1 interval")
    cw = by_partition[weight_fusion].classification
    if cw is None or not (cw.cameron and {bs.e for bs in cw.hamming} == {1}):
        failures.append("weight fusion not cameron with an e=1 witness")
    cc = by_partition[coarse].classification
    if cc is None or cc.verdict != "hamming" or {bs.e for bs in cc.hamming} != {2}:
        failures.append("coarse fusion not in the e=2 interval")

    # primitivity, cross-checked against BFS on the explicit schemes:
    # the tensor square's single-coordinate relation is disconnected
    primitive = {r.partition for r in report.primitive_records}
    if primitive != {weight_fusion, coarse}:
        failures.append(f"primitive set has {len(primitive)} members, expected 2")
    for m in (4, 5):
        raw = build_explicit(1, 2, m)
        fused = raw.with_partition(tensor_square)
        if explicit_connectivity(fused, tensor_square.cell_of((1, 0))):
            failures.append(f"BFS found the single-coordinate relation connected at m={m}")
    _report(
        3,
        not failures,
        "5 valid fusions; wreath pair imprimitive; intervals e=1,e=1,e=2 for the "
        "named three; 2 primitive (tensor square imprimitive, BFS-confirmed)"
        + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_4_theorem_verification():
    t0 = time.perf_counter()
    failures = []
    for k, d in ((1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)):
        rep = verify_theorem(k, d)
        if not rep.passed:
            failures.append(f"outside verdict at ({k},{d}): {[r.to_dict() for r in rep.outside]}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 600:
        failures.append(f"runtime {elapsed:.0f}s over budget")
    _report(
        4,
        not failures,
        f"no outside verdict over six (k,d) pairs incl. the Bell(8) case ({elapsed:.1f}s)"
        + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_5_johnson_rigidity():
    failures = []
    for k in (2, 3):
        report = enumerate_fusions(k, 1)
        discrete = FusionPartition.from_cells(k, 1, [[[x]] for x in range(k + 1)])
        coarse = FusionPartition.from_cells(k, 1, [[[0]], [[x] for x in range(1, k + 1)]])
        found = {r.partition for r in report.records}
        if found != {discrete, coarse}:
            failures.append(f"k={k}: fusions are not exactly the scheme itself and the trivial one")
    _report(
        5,
        not failures,
        "k=2,3 at d=1: only the Johnson scheme itself and the trivial scheme survive"
        + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_6_proposition_suite():
    failures = []
    fusions = []
    for k, d in ((1, 2), (1, 1), (1, 3), (2, 1), (2, 2), (3, 1)):
        fusions.extend(r.partition for r in enumerate_fusions(k, d).records)
    cells = 0
    for part in fusions:
        for beta in range(part.num_cells):
            cells += 1
            kp = verify_key_prop(part, beta, check_valid=False)
            if not kp.passed:
                failures.append(f"cell proposition fails: {part.cells} cell {beta}: {kp.failures}")
            if analyze_cell(part, beta).count(beta) != 1:
                failures.append(f"self count != 1 on {part.cells} cell {beta}")
    _report(
        6,
        not failures,
        f"four-part proposition and unit self-counts on {cells} cells across "
        f"{len(fusions)} valid fusions" + ("; " + "; ".join(failures[:3]) if failures else ""),
    )


def test_criterion_7_primitivity_agreement():
    t0 = time.perf_counter()
    failures = []
    checked = 0
    cases = [(1, d, m) for d in (1, 2, 3) for m in (3, 4, 5)]
    cases += [(2, 1, m) for m in (6, 7)]
    fusions_by_kd = {}
    for k, d, m in cases:
        if (k, d) not in fusions_by_kd:
            fusions_by_kd[(k, d)] = [r.partition for r in enumerate_fusions(k, d).records]
        raw = build_explicit(k, d, m)
        for part in fusions_by_kd[(k, d)]:
            fused = raw.with_partition(part)
            for alpha in part.nonidentity_indices():
                checked += 1
                by_index = cell_connected(part, alpha, m)
                by_graph = explicit_connectivity(fused, alpha)
                if by_index != by_graph:
                    failures.append(f"({k},{d},{m}) cell {alpha}: closure {by_index} vs BFS {by_graph}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.0f}s over budget")
    _report(
        7,
        not failures,
        f"index closure agrees with BFS on {checked} relation graphs ({elapsed:.1f}s)"
        + ("; " + "; ".join(failures[:3]) if failures else ""),
    )


def test_criterion_8_wl_stabilization():
    t0 = time.perf_counter()
    failures = []
    for k, d, m in ((1, 2, 4), (1, 2, 5), (2, 1, 7), (2, 1, 8)):
        raw = build_explicit(k, d, m)
        start = graph_coloring(raw)
        stable = wl_closure(start)
        target = coloring_from_scheme(raw.with_partition(cameron_partition(k, d)))
        if not colorings_equal_as_partitions(stable, target):
            failures.append(f"({k},{d},{m}): stabilization misses the symmetrized-power scheme")
        if not refines_coloring(stable, start):
            failures.append(f"({k},{d},{m}): refinement is not monotone")
        again = wl_closure(stable)
        if again.rounds != 0 or not colorings_equal_as_partitions(again, stable):
            failures.append(f"({k},{d},{m}): closure is not idempotent")
    elapsed = time.perf_counter() - t0
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.0f}s over budget")
    _report(
        8,
        not failures,
        f"graph colorings stabilize to the symmetrized-power schemes, idempotent and "
        f"monotone ({elapsed:.1f}s)" + ("; " + "; ".join(failures) if failures else ""),
    )
