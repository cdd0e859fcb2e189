"""Enumerate closed grade subsets per n and summarise how they relate to
the twelve-item catalogue.

    python3 scripts/enumerate_subalgebras.py --n-max 14 --variant plain
"""

import argparse
from collections import Counter

from cliffrank import enumerate_closed
from cliffrank.subalgebras import COMPLEX_LIE, VARIANTS


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--variant", choices=VARIANTS, default=COMPLEX_LIE)
    ap.add_argument("--verbose", action="store_true", help="list every closed subset")
    args = ap.parse_args()
    for n in range(1, args.n_max + 1):
        closed = enumerate_closed(n, args.variant)
        kinds = Counter(s.provenance.split()[0] for s in closed)
        print(f"n={n}: {len(closed)} closed; " + ", ".join(f"{k}={v}" for k, v in sorted(kinds.items())))
        for s in closed:
            if args.verbose or s.provenance == "extra":
                print(f"  {sorted(s.grades)}\t{s.provenance}")


if __name__ == "__main__":
    main()
