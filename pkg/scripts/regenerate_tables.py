"""Write computed rank tables for n = 1..N as text files and compare them
with the shipped golden tables.

    python3 scripts/regenerate_tables.py --out tables/ --n-max 12
"""

import argparse
from pathlib import Path

from cliffrank import build_table
from cliffrank.cli import golden_text, parse_table_text
from cliffrank.rank_formulas import KINDS


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("tables"))
    ap.add_argument("--n-max", type=int, default=10)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for kind in KINDS:
        for n in range(1, args.n_max + 1):
            text = build_table(n, kind).to_text()
            (args.out / f"{kind}_n{n:02d}.tsv").write_text(text)
            if n > 10:
                print(f"{kind} n={n}: written (no golden table)")
                continue
            gold = parse_table_text(golden_text(n, kind))[1]
            ours = parse_table_text(text)[1]
            diff = [f"({k},{l}) printed {v} computed {ours[k, l]}" for (k, l), v in gold.items() if ours[k, l] != v]
            print(f"{kind} n={n}: " + ("identical" if not diff else "; ".join(diff)))


if __name__ == "__main__":
    main()
