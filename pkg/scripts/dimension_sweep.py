#!/usr/bin/env python3
"""Sweep the graded quotient dimensions over m and ground fields.

Prints, per m: the total dimension in each characteristic (they agree and
equal 2^m), the wall time, and the graded table (degree rows, weight columns)
over the rationals.  Degrees above m are verified to vanish through m+2.

Usage: python3 scripts/dimension_sweep.py [max_m] [--chars 0,2,3,5]
"""

import argparse
import sys
import time

from sl2weyl import CoeffRing, quotient_dim


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("max_m", type=int, nargs="?", default=5)
    ap.add_argument("--chars", default="0,2,3,5")
    args = ap.parse_args()
    chars = [int(c) for c in args.chars.split(",")]

    for m in range(1, args.max_m + 1):
        totals = {}
        tables = {}
        for char in chars:
            t0 = time.monotonic()
            rep = quotient_dim(m, CoeffRing(char), m + 2)
            dt = time.monotonic() - t0
            totals[char] = (rep.total, dt)
            tables[char] = rep.dims
        line = "  ".join(
            f"char {c}: {tot} [{dt:.2f}s]" for c, (tot, dt) in totals.items()
        )
        print(f"m={m}  (2^m = {2**m})  {line}")
        if len({t for t, _ in totals.values()}) != 1:
            print("  !! totals disagree between characteristics")
            return 1
        dims = tables[chars[0]]
        max_w = max((w for (_, w), q in dims.items() if q), default=0)
        print("     weight:", " ".join(f"{w:>3}" for w in range(max_w + 1)))
        for d in range(m + 1):
            row = [dims.get((d, w), 0) for w in range(max_w + 1)]
            if any(row):
                print(f"  degree {d}:", " ".join(f"{q:>3}" for q in row))
    return 0


if __name__ == "__main__":
    sys.exit(main())
