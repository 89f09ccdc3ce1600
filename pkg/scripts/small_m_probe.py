#!/usr/bin/env python3
"""Probe fusion validity below the generic regime.

Generic validity (polynomial identity) implies numeric validity at every
m >= 3k, but small m can admit extra coincidence fusions.  This script
enumerates numeric-mode fusions over a range of m and prints whichever
partitions are valid at that m only.  No classification is attached to
the extras; they live outside the regime where the interval theorem
applies.

Usage:
    python scripts/small_m_probe.py --k 1 --d 2 --m-max 8
"""

import argparse
import sys

from schemefusion.enumeration import spot_check_small_m


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--k", type=int, default=1)
    parser.add_argument("--d", type=int, default=2)
    parser.add_argument("--m-max", type=int, default=8)
    args = parser.parse_args()

    k, d = args.k, args.d
    print(f"(k, d) = ({k}, {d}): numeric-mode fusions vs the generic list")
    any_extras = False
    for m in range(3 * k, args.m_max + 1):
        rep = spot_check_small_m(k, d, m)
        assert rep.consistent, "generic-valid fusion missing numerically: impossible"
        line = (
            f"  m = {m}: generic {len(rep.generic_valid)}, "
            f"numeric {len(rep.numeric_valid)}, extras {len(rep.numeric_only)}"
        )
        print(line)
        for part in rep.numeric_only:
            any_extras = True
            print(f"      coincidence at m={m}: {[list(map(list, c)) for c in part.cells]}")
    if not any_extras:
        print("  no small-m coincidences in this range")
    return 0


if __name__ == "__main__":
    sys.exit(main())
