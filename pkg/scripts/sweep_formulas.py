#!/usr/bin/env python3
"""Sweep the desk-scale grid: build every registered construction, check
its edge count against the registry, and optionally verify saturation.

Usage: python scripts/sweep_formulas.py [--verify] [--max-k 8] [--max-l 12]
       [--max-n 8]
"""

import argparse
import sys
import time

from partsat.formulas import construction_for, known_value
from partsat.graphs import PartSpec
from partsat.verifier import verify


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=8)
    ap.add_argument("--max-l", type=int, default=12)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--verify", action="store_true",
                    help="also run the full saturation check per instance")
    args = ap.parse_args()

    t0 = time.perf_counter()
    bad = 0
    checked = 0
    for k in range(2, args.max_k + 1):
        for l in range(3, args.max_l + 1):
            for n in range(1, args.max_n + 1):
                spec = PartSpec.balanced(k, n)
                try:
                    pair = construction_for(spec, l)
                except ValueError:
                    pair = None
                if pair is None:
                    continue
                g, meta = pair
                bound = known_value(spec, l)
                checked += 1
                if g.edge_count != bound.best_upper:
                    bad += 1
                    print(f"EDGES k={k} l={l} n={n}: {g.edge_count} != "
                          f"{bound.best_upper} ({bound.source})")
                    continue
                if args.verify and g.num_vertices <= 60:
                    rep = verify(g, l)
                    if not (rep.cfree is True and rep.saturated is True):
                        bad += 1
                        print(f"SAT k={k} l={l} n={n}: cfree={rep.cfree} "
                              f"saturated={rep.saturated}")
    print(f"{checked} cells checked, {bad} problems, "
          f"{time.perf_counter() - t0:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
