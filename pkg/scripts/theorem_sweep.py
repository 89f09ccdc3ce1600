#!/usr/bin/env python3
"""Sweep the interval classification over all desk-scale (k, d) pairs.

For each pair: enumerate every fusion partition, split by primitivity,
classify the primitive ones, and print the verdict table.  Exits nonzero
if any primitive fusion falls outside both intervals.

Usage:
    python scripts/theorem_sweep.py [--pairs 1,1 1,2 ...] [--workers N] [--out DIR]
"""

import argparse
import sys
import time
from pathlib import Path

from schemefusion.enumeration import verify_theorem

DEFAULT_PAIRS = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--pairs", nargs="*", default=None, help="k,d pairs, e.g. 1,2 2,2")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out", default=None, help="directory for per-pair JSON reports")
    args = parser.parse_args()

    pairs = DEFAULT_PAIRS
    if args.pairs:
        pairs = [tuple(int(x) for x in p.split(",")) for p in args.pairs]

    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)

    all_passed = True
    for k, d in pairs:
        t0 = time.perf_counter()
        rep = verify_theorem(k, d, workers=args.workers)
        dt = time.perf_counter() - t0
        r = rep.report
        print(f"\n(k, d) = ({k}, {d})   [{dt:.2f}s]")
        print(f"  candidates explored: {r.candidates}   nodes: {r.nodes}")
        print(f"  valid fusions: {r.valid_count}   primitive: {len(r.primitive_records)}")
        for rec in r.primitive_records:
            c = rec.classification
            tags = []
            if c.cameron:
                tags.append("cameron")
            tags += [f"hamming(e={bs.e})" for bs in c.hamming]
            print(f"    {len(rec.partition.cells):2d} cells  ->  {', '.join(tags) or 'OUTSIDE'}")
        verdict = "PASS" if rep.passed else "FAIL (outside verdict found)"
        print(f"  {verdict}")
        all_passed &= rep.passed
        if out_dir:
            (out_dir / f"theorem_k{k}_d{d}.json").write_text(rep.to_json() + "\n")

    print("\nsweep:", "all intervals confirmed" if all_passed else "FALSIFICATION CANDIDATE FOUND")
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
