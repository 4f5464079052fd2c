"""Ten-cycle sums of DGP(n, 2) for n > 20, and the A = B check they imply.

R_10 != T_10 rules out edge-transitivity of DGP(n, 2), hence A(n, 2) = B(n, 2).
The script also counts the 10-cycles of GP(n, 2) with unequal outer and inner
edge counts, and confirms A = B by direct search.
"""
from __future__ import annotations

import argparse
import sys

from gpstab.cycles import census, enumerate_cycles
from gpstab.graphs import make_gp
from gpstab.search import a_group, b_group


def gp_unbalanced(n: int, j: int = 10) -> int:
    count = 0
    for c in enumerate_cycles(make_gp((n, 2)), j):
        r = t = 0
        for a, b in zip(c, c[1:] + c[:1]):
            if a < n and b < n:
                r += 1
            elif a >= n and b >= n:
                t += 1
        count += r != t
    return count


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmin", type=int, default=21)
    ap.add_argument("--nmax", type=int, default=40)
    args = ap.parse_args()
    ok = True
    print(f"{'n':>3} {'R10':>6} {'S10':>6} {'T10':>6} {'GP r!=t':>8} {'|A|':>5} {'|B|':>5}")
    for n in range(args.nmin, args.nmax + 1):
        c = census((n, 2), 10, classify_types=False)
        a, b = a_group((n, 2)).order(), b_group((n, 2)).order()
        ok &= c.R != c.T and a == b
        print(f"{n:>3} {c.R:>6} {c.S:>6} {c.T:>6} {gp_unbalanced(n):>8} {a:>5} {b:>5}")
    print("A = B certified by R10 != T10 for every n" if ok else "certificate failed")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
