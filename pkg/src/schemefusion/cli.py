"""Command-line entry point.

One subcommand per workflow; reports are JSON (diffable in CI), a short
human summary goes to stdout and the full report to --out when given.
Exit codes: 0 success, 1 mathematical falsification or mismatch, 2 usage
error.  Every run is fully specified by its flags; there is no config
file and no environment variable.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .enumeration import (
    GuardExceeded,
    enumerate_fusions,
    spot_check_small_m,
    verify_theorem,
)
from .explicit import (
    build_explicit,
    coloring_from_scheme,
    colorings_equal_as_partitions,
    cross_validate,
    graph_coloring,
    wl_closure,
)
from .fusion import FusionPartition, is_primitive, is_valid_fusion
from .johnson import scalar_structure_constant, vector_structure_constant
from .schemes import cameron_partition, classify
from .suites import fusion_property_suite, johnson_lemma_suite


def _parse_vec(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _emit(obj: dict, out: str | None) -> None:
    print(json.dumps(obj, sort_keys=True))
    if out:
        Path(out).write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _load_partition(path: str) -> FusionPartition:
    return FusionPartition.from_json(Path(path).read_text())


def _cmd_structure_constant(args) -> int:
    k = args.k
    a, b, c = _parse_vec(args.a), _parse_vec(args.b), _parse_vec(args.c)
    d = args.d if args.d is not None else len(a)
    if not (len(a) == len(b) == len(c) == d):
        print("error: a, b, c must share the length d", file=sys.stderr)
        return 2
    if d == 1:
        p = scalar_structure_constant(k, a[0], b[0], c[0])
    else:
        p = vector_structure_constant(k, a, b, c)
    report: dict = {
        "k": k,
        "d": d,
        "a": list(a),
        "b": list(b),
        "c": list(c),
        "polynomial": p.to_text(),
        "coefficients": p.to_fraction_strings(),
        "degree": None if not p else p.degree,
    }
    if args.m is not None:
        report["m"] = args.m
        report["value"] = str(p.evaluate(args.m))
    _emit(report, args.out)
    return 0


def _cmd_check_fusion(args) -> int:
    part = _load_partition(args.file)
    m = args.m
    result = is_valid_fusion(part, m)
    report: dict = {"valid": result.valid, "mode": "generic" if m is None else f"m={m}"}
    if result.valid:
        report["primitive"] = is_primitive(part, m)
    else:
        report["primitive"] = None
        report["witness"] = result.witness.to_dict()
    _emit(report, args.out)
    return 0


def _cmd_classify(args) -> int:
    part = _load_partition(args.file)
    if not is_valid_fusion(part):
        _emit({"error": "not a valid fusion in generic mode"}, args.out)
        return 1
    if not is_primitive(part):
        _emit({"error": "fusion is not primitive"}, args.out)
        return 1
    _emit(classify(part, check=False).to_dict(), args.out)
    return 0


def _cmd_enumerate(args) -> int:
    try:
        report = enumerate_fusions(
            args.k,
            args.d,
            m=args.m,
            primitive_only=args.primitive_only,
            prune=not args.no_prune,
            force=args.force,
            workers=args.workers,
        )
    except GuardExceeded as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if report.forced:
        print("warning: guard exceeded; not exhaustive unless this run completed", file=sys.stderr)
    summary = report.to_dict()
    full = dict(summary)
    summary.pop("fusions")
    _emit(summary, None)
    if args.out:
        Path(args.out).write_text(json.dumps(full, sort_keys=True, indent=2) + "\n")
    return 0


def _cmd_verify_theorem(args) -> int:
    try:
        rep = verify_theorem(args.k, args.d, force=args.force, workers=args.workers)
    except GuardExceeded as exc:
        print(str(exc), file=sys.stderr)
        return 2
    _emit(rep.to_dict(), args.out)
    return 0 if rep.passed else 1


def _cmd_spot_check(args) -> int:
    rep = spot_check_small_m(args.k, args.d, args.m, force=args.force)
    _emit(rep.to_dict(), args.out)
    return 0 if rep.consistent else 1


def _cmd_oracle(args) -> int:
    fusions = [_load_partition(args.fusion)] if args.fusion else []
    rng = random.Random(args.seed) if args.seed is not None else None
    rep = cross_validate(args.k, args.d, args.m, fusions=fusions, rng=rng)
    _emit(rep.to_dict(), args.out)
    return 0 if rep.passed else 1


def _cmd_wl(args) -> int:
    k, d = args.k, args.d
    if args.graph == "johnson" and d != 1:
        print("the johnson graph is the d=1 case; pass --d 1", file=sys.stderr)
        return 2
    scheme = build_explicit(k, d, args.m)
    stable = wl_closure(graph_coloring(scheme))
    fused = build_explicit(k, d, args.m, cameron_partition(k, d))
    matches = colorings_equal_as_partitions(stable, coloring_from_scheme(fused))
    _emit(
        {
            "graph": args.graph,
            "k": k,
            "d": d,
            "m": args.m,
            "vertices": scheme.n,
            "stable_classes": stable.num_colors,
            "class_sizes": stable.class_sizes(),
            "rounds": stable.rounds,
            "equals_symmetrized_power_scheme": matches,
        },
        args.out,
    )
    return 0 if matches else 1


def _cmd_verify_lemmas(args) -> int:
    johnson_rep = johnson_lemma_suite(
        k_max=args.k_max, vector_k_max=args.vector_k_max, vector_d_max=args.vector_d_max
    )
    fusion_rep = fusion_property_suite()
    ok = johnson_rep["passed"] and fusion_rep["passed"]
    for name, good in [*johnson_rep["checks"].items(), *fusion_rep["checks"].items()]:
        print(f"{'ok  ' if good else 'FAIL'} {name}")
    _emit({"johnson": johnson_rep, "fusion": fusion_rep, "passed": ok}, args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schemefusion",
        description="Exact fusion-scheme computations for tensor powers of Johnson schemes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, out=True):
        if out:
            p.add_argument("--out", help="write the full JSON report to this path")

    p = sub.add_parser("structure-constant", help="print p^a_{b,c}(m) as a polynomial")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--a", required=True, help="scalar or comma-separated vector")
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--m", type=int, default=None, help="also evaluate at this m")
    add_common(p)
    p.set_defaults(func=_cmd_structure_constant)

    p = sub.add_parser("check-fusion", help="validity and primitivity of a partition file")
    p.add_argument("--file", required=True)
    p.add_argument("--mode", choices=["generic"], default="generic",
                   help="generic is the default; give --m for numeric mode")
    p.add_argument("--m", type=int, default=None)
    add_common(p)
    p.set_defaults(func=_cmd_check_fusion)

    p = sub.add_parser("classify", help="interval classification of a primitive fusion")
    p.add_argument("--file", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="exhaustively enumerate fusions at (k, d)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="numeric mode at this m")
    p.add_argument("--primitive-only", action="store_true")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--force", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify-theorem", help="classify all primitive fusions; fail on any outside verdict")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--force", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    add_common(p)
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("spot-check-small-m", help="diff numeric-mode fusions at one m against generic")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--force", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_spot_check)

    p = sub.add_parser("oracle", help="brute-force cross-validation at concrete m")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--fusion", help="partition JSON file to connectivity-check")
    p.add_argument("--seed", type=int, default=None, help="seed for representative sampling")
    add_common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("wl", help="2-WL stabilization of the Cameron/Johnson graph")
    p.add_argument("--graph", choices=["cameron", "johnson"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_wl)

    p = sub.add_parser("verify-lemmas", help="run the closed-form and cell-structure property suites")
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--vector-k-max", type=int, default=2)
    p.add_argument("--vector-d-max", type=int, default=3)
    add_common(p)
    p.set_defaults(func=_cmd_verify_lemmas)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "m", None) is not None and hasattr(args, "k"):
        if args.m < 3 * args.k:
            parser.error(f"--m must be at least 3k = {3 * args.k}")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
