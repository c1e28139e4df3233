"""Command-line front end: construct, verify, solve, table.

Exit codes are stable contracts: 0 success (verify: saturated), 2 not
saturated, 3 inconclusive (budget exhausted), 1 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructions import (
    ConstructionMeta,
    build_bipartite_G,
    build_W,
    build_W_star_5_3,
    build_Y,
    build_Z,
    build_gamma,
    build_matched_tripartite,
    build_zeta,
)
from .formulas import expected_edges, format_table, known_value
from .graphio import load_graph, save_graph
from .graphs import PartSpec
from .longcycle import build_construction3
from .solver import exact_sat, greedy_upper
from .verifier import verify


def _spec_from_args(args) -> PartSpec:
    if args.n1 is not None or args.n2 is not None:
        if args.n1 is None or args.n2 is None:
            raise ValueError("give both --n1 and --n2")
        return PartSpec((args.n1, args.n2))
    if args.k is None or args.n is None:
        raise ValueError("give --k and --n, or --n1 and --n2")
    return PartSpec.balanced(args.k, args.n)


def _build_family(args):
    fam = args.family
    if fam == "bipartite-g":
        if args.n1 is None or args.n2 is None or args.l is None:
            raise ValueError("bipartite-g needs --n1, --n2 and --l (half-length)")
        return build_bipartite_G(args.n1, args.n2, args.l)
    if fam == "gamma":
        g = build_gamma(args.l, args.k)
        return g, ConstructionMeta(
            family="gamma", params={"l": args.l, "k": args.k}, landmarks={}, graph=g
        )
    if fam == "zeta":
        return build_zeta(args.l, args.k)
    if fam == "w":
        return build_W(args.l, args.k, args.n)
    if fam == "w-star-53":
        return build_W_star_5_3(args.n)
    if fam == "y":
        return build_Y(args.k, args.n)
    if fam == "z":
        return build_Z(args.l, args.k, args.n)
    if fam == "matched-tripartite":
        return build_matched_tripartite(args.n)
    if fam == "long-cycle":
        return build_construction3(args.l, args.k, args.n)
    raise ValueError(f"unknown family {fam!r}")


def cmd_construct(args) -> int:
    g, meta = _build_family(args)
    print(f"family {meta.family} params {meta.params}")
    print(f"edges {g.edge_count}")
    try:
        expect = expected_edges(g.spec, meta.target_length) if meta.target_length else None
    except ValueError:
        expect = None
    if expect is not None:
        tag = "matches" if expect == g.edge_count else "MISMATCH with"
        print(f"registry expects {expect} ({tag} known_value)")
        if expect != g.edge_count and meta.family not in ("gamma", "zeta"):
            print("error: construction contradicts the registry", file=sys.stderr)
            return 1
    if args.out:
        save_graph(g, args.out)
        Path(str(args.out) + ".meta.json").write_text(
            json.dumps(meta.to_json_dict(), indent=2) + "\n"
        )
        print(f"wrote {args.out}.g6 / .parts.json / .meta.json")
    return 0


def cmd_verify(args) -> int:
    prefix = args.infile
    if prefix.endswith(".g6"):
        prefix = prefix[: -len(".g6")]
    try:
        g = load_graph(prefix)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: cannot load {args.infile}: {exc}", file=sys.stderr)
        return 1
    report = verify(g, args.l, budget=args.budget)
    if args.json:
        print(report.to_json(), end="")
    else:
        print(f"l={report.l} edges={report.edges} connected={report.connected}")
        print(f"cfree={report.cfree} saturated={report.saturated}")
        for f in report.failures[:20]:
            print(f"  failure: ({f['u']},{f['v']}) {f['reason']}")
        if len(report.failures) > 20:
            print(f"  ... {len(report.failures) - 20} more")
    if args.out:
        Path(str(args.out) + ".report.json").write_text(report.to_json())
    if report.inconclusive:
        return 3
    return 0 if (report.cfree and report.saturated) else 2


def cmd_solve(args) -> int:
    try:
        spec = _spec_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    bound = known_value(spec, args.l)
    if args.mode == "greedy":
        out = greedy_upper(spec, args.l, seed=args.seed)
        print(f"greedy upper bound {out.value} (seed {args.seed})")
    else:
        out = exact_sat(
            spec, args.l, budget=args.budget, workers=args.threads
        )
        if out.mode == "inconclusive":
            print(f"inconclusive: {out.lower} <= sat <= ? after {out.nodes} nodes")
            return 3
        if bound.kind == "exact":
            if out.value != bound.value:
                print(
                    f"error: solver found {out.value} but registry says "
                    f"{bound.value} ({bound.source})",
                    file=sys.stderr,
                )
                return 1
            print(f"{out.value} (matches {bound.source})")
        else:
            lo, hi = bound.best_lower, bound.best_upper
            if (lo is not None and out.value < lo) or (
                hi is not None and out.value > hi
            ):
                print(
                    f"error: solver value {out.value} outside registry "
                    f"bounds [{lo}, {hi}]",
                    file=sys.stderr,
                )
                return 1
            print(f"{out.value} (resolves an open cell; registry had {bound.describe()})")
        print(f"extremal classes: {len(out.extremal)}  nodes: {out.nodes}")
    if args.out:
        Path(str(args.out) + ".solve.json").write_text(out.to_json())
        if out.extremal:
            save_graph(out.extremal[0], args.out)
    return 0


def cmd_table(args) -> int:
    sys.stdout.write(format_table(args.max_k, args.max_l, args.n, as_csv=args.csv))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="partsat",
        description="Constructions, verification and exact search for "
        "cycle saturation in complete multipartite hosts.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named construction family")
    c.add_argument("--family", required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--l", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--n1", type=int)
    c.add_argument("--n2", type=int)
    c.add_argument("--out", help="output path prefix")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check saturation of a stored graph")
    v.add_argument("--in", dest="infile", required=True, help=".g6 path or prefix")
    v.add_argument("--l", type=int, required=True)
    v.add_argument("--budget", type=int, default=10**7)
    v.add_argument("--json", action="store_true")
    v.add_argument("--out", help="report path prefix")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="compute sat exactly or greedily")
    s.add_argument("--k", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--n1", type=int)
    s.add_argument("--n2", type=int)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--mode", choices=["exact", "greedy"], default="exact")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--out", help="output path prefix")
    s.set_defaults(func=cmd_solve)

    t = sub.add_parser("table", help="render the registry grid")
    t.add_argument("--max-k", type=int, default=8)
    t.add_argument("--max-l", type=int, default=12)
    t.add_argument("--n", type=int, default=3)
    t.add_argument("--csv", action="store_true")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
