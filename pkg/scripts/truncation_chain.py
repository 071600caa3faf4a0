#!/usr/bin/env python3
"""Show the truncation chain for one m: basis sizes, oracle dimensions, and
the nesting of index sets as the truncation level N grows.

Usage: python3 scripts/truncation_chain.py [m]
"""

import argparse
import sys

from sl2weyl import RATIONALS, truncated_basis, truncated_quotient
from sl2weyl.basis_enum import revlex_basis


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("m", type=int, nargs="?", default=5)
    args = ap.parse_args()
    m = args.m

    full = revlex_basis(m)
    prev: frozenset = frozenset()
    print(f"m={m}: full basis size {len(full)} = 2^{m}")
    for n in range(1, m + 1):
        bs = truncated_basis(m, n)
        nested = prev <= bs.monomials
        rep = truncated_quotient(m, n, RATIONALS, m + 2)
        status = "ok" if rep.passed else "MISMATCH"
        print(
            f"  N={n}: basis {len(bs):>4}  oracle dims {rep.dims.total:>4}  "
            f"nested={nested}  verified={status}"
        )
        if not rep.passed or not nested:
            return 1
        prev = bs.monomials
    return 0


if __name__ == "__main__":
    sys.exit(main())
