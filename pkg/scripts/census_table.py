"""Reconcile the 8-cycle census of DGP(n, k) with the type table, k >= 3."""
from __future__ import annotations

import argparse
import sys

from gpstab.cycles import TABLE_EXCEPTIONS, census, expected_type_counts


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=30)
    args = ap.parse_args()

    mismatches = 0
    print(f"{'n':>3} {'k':>3} {'R8':>5} {'S8':>5} {'T8':>5}  types")
    for n in range(7, args.nmax + 1):
        for k in range(3, (n + 1) // 2):
            c = census((n, k), 8)
            flag = ""
            if (n, k) in TABLE_EXCEPTIONS:
                flag = "  (excluded)"
            elif c.by_type != expected_type_counts((n, k)) or c.unlisted:
                flag = "  MISMATCH"
                mismatches += 1
            types = " ".join(f"{t}:{v}" for t, v in c.by_type.items())
            print(f"{n:>3} {k:>3} {c.R:>5} {c.S:>5} {c.T:>5}  {types}{flag}")
    print(f"mismatches={mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
