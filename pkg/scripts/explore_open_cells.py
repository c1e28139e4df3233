#!/usr/bin/env python3
"""Attack registry cells without an exact value using exhaustive search
(small hosts) and seeded greedy completions (anything larger).

Usage: python scripts/explore_open_cells.py [--max-k 4] [--max-l 6]
       [--max-n 3] [--seeds 20] [--threads 4]
"""

import argparse
import sys

from partsat.formulas import known_value
from partsat.graphs import PartSpec, build_host
from partsat.solver import exact_sat, greedy_upper


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=4)
    ap.add_argument("--max-l", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--threads", type=int, default=4)
    args = ap.parse_args()

    for k in range(2, args.max_k + 1):
        for l in range(3, args.max_l + 1):
            for n in range(1, args.max_n + 1):
                spec = PartSpec.balanced(k, n)
                bound = known_value(spec, l)
                if bound.kind in ("exact", "no-odd-cycle"):
                    continue
                label = f"k={k} n={n} l={l}"
                if build_host(spec).edge_count <= 20:
                    out = exact_sat(spec, l, workers=args.threads)
                    print(f"{label}: exact {out.value} "
                          f"({len(out.extremal)} classes, was {bound.describe()})")
                else:
                    best = min(
                        greedy_upper(spec, l, seed=s).value
                        for s in range(args.seeds)
                    )
                    print(f"{label}: greedy <= {best} "
                          f"(was {bound.describe()})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
