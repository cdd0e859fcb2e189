"""Time the brute-force rank check per n over every signature split."""

import argparse
import time

from cliffrank import Signature, actual_grades, kernel_grades
from cliffrank.rank_formulas import KINDS


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=10)
    args = ap.parse_args()
    total = 0.0
    for n in range(1, args.n_max + 1):
        start = time.perf_counter()
        bad = sum(actual_grades(sig, k, l, kind) != kernel_grades(n, k, l, kind)
                  for sig in Signature.splits(n) for k in range(n + 1) for l in range(n + 1) for kind in KINDS)
        dt = time.perf_counter() - start
        total += dt
        print(f"n={n:2d}  {n + 1} splits  {bad} mismatches  {dt:7.2f}s")
    print(f"total {total:.2f}s")


if __name__ == "__main__":
    main()
