"""Command-line interface.

Exit codes encode run outcomes so experiment scripts can branch on them
without parsing output: 0 covered, 1 input/generator error, 2 bad
arguments or unknown strategy, 3 deadlock, 4 step limit, 5 invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import envgen, render, topology
from .engine import SimulationTrace, run
from .errors import (
    BadParameters,
    DispersimError,
    InvariantViolation,
    MapError,
)
from .grid import from_ascii
from .metrics import CSV_HEADER, compare_runs
from .strategies import STRATEGIES, make_strategy

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_DEADLOCK = 3
EXIT_LIMIT = 4
EXIT_INVARIANT = 5

_OUTCOME_EXITS = {"covered": EXIT_OK, "deadlock": EXIT_DEADLOCK, "limit": EXIT_LIMIT}


def _load_region(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return from_ascii(fh.read())
    except OSError as exc:
        raise DispersimError(f"cannot read {path}: {exc}") from exc


def _parse_door(text: str):
    try:
        x, y = text.split(",")
        return int(x), int(y)
    except ValueError:
        raise BadParameters(f"door must be X,Y integers, got {text!r}") from None


def cmd_gen(args) -> int:
    if args.shape == "rect":
        if args.w is None or args.h is None:
            raise BadParameters("rect needs --w and --h")
        door = _parse_door(args.door) if args.door else (0, 0)
        region = envgen.rect(args.w, args.h, door)
    elif args.shape == "random":
        if args.cells is None:
            raise BadParameters("random needs --cells")
        region = envgen.random_simply_connected(args.cells, args.seed)
    else:  # gk
        if args.r is None or args.k is None:
            raise BadParameters("gk needs --r and --k")
        region = envgen.g_k(args.r, args.k)
    text = region.to_ascii()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    flag = str(topology.is_simply_connected(region)).lower()
    print(f"V={len(region.cells)} simply_connected={flag}")
    return EXIT_OK


def cmd_run(args) -> int:
    region = _load_region(args.env)
    strategy = make_strategy(args.strategy, region, args.seed)
    record = args.trace is not None
    try:
        trace, metrics = run(
            region, strategy, max_steps=args.max_steps, record=record, check=args.check
        )
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    print(CSV_HEADER)
    print(metrics.csv_row(args.env, region, args.strategy, args.seed))
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump(trace.to_json_dict(), fh)
            fh.write("\n")
    return _OUTCOME_EXITS[metrics.outcome]


def cmd_compare(args) -> int:
    region = _load_region(args.env)
    names = [s.strip() for s in args.strategies.split(",") if s.strip()]
    for name in names:
        if name not in STRATEGIES:
            raise BadParameters(f"unknown strategy: {name!r}")
    seeds = [args.seed + i for i in range(args.reps)]
    table = compare_runs(
        region, names, seeds, reps=args.reps, max_steps=args.max_steps, env_label=args.env
    )
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(CSV_HEADER + "\n")
            for name, seed, metrics, err in table.rows:
                if metrics is not None:
                    fh.write(metrics.csv_row(args.env, region, name, seed) + "\n")
                else:
                    fh.write(
                        f"{args.env},{region.door[0]},{region.door[1]},"
                        f"{len(region.cells)},{name},{seed},error:{err},,,,,,,\n"
                    )
    width = max(len(n) for n in names)
    print(f"{'strategy':<{width}}  runs  total (max)")
    for summary in table.summaries:
        entry = summary.table_entry() if summary.runs else "-"
        print(f"{summary.strategy:<{width}}  {summary.runs:>4}  {entry}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    region = _load_region(args.env)
    simply = topology.is_simply_connected(region)
    kinds = {topology.CORNER: 0, topology.HALL: 0, topology.INTERIOR: 0}
    for cell in region.cells:
        kinds[topology.classify_cells(region.cells, cell).kind] += 1
    dist = topology.bfs_distances(region, region.door)
    print(f"V={len(region.cells)}")
    print(f"simply_connected={str(simply).lower()}")
    print(f"corners={kinds[topology.CORNER]}")
    print(f"halls={kinds[topology.HALL]}")
    if simply:
        tree = topology.hall_tree(region)
        print(f"hall_tree_components={len(tree.components)}")
    else:
        print("hall_tree_components=n/a")
    print(f"sum_distances={topology.sum_distances(region, region.door)}")
    median = sorted(topology.geometric_median(region))
    print("geometric_median=" + ";".join(f"{x},{y}" for x, y in median))
    print(f"max_distance={max(dist.values())}")
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        with open(args.trace, encoding="utf-8") as fh:
            data = json.load(fh)
        trace = SimulationTrace.from_json_dict(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"bad trace: {exc}", file=sys.stderr)
        return EXIT_IO
    last = len(trace.steps)
    if args.format == "ascii":
        for t in range(args.every, last + 1, args.every):
            print(f"t={t}")
            print(render.ascii_frame(trace, t))
            print()
        if last % args.every:
            print(f"t={last}")
            print(render.ascii_frame(trace, last))
            print()
    else:
        out = args.out or "."
        for path in render.svg_frames(trace, args.every, out):
            print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dispersim",
        description="Uniform dispersal simulator and analysis tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an environment map")
    p.add_argument("--shape", choices=["rect", "random", "gk"], required=True)
    p.add_argument("--w", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--door", help="door cell as X,Y (rect only; default 0,0)")
    p.add_argument("--cells", type=int, help="cell count for random regions")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="simulate one strategy on a map")
    p.add_argument("--env", required=True)
    p.add_argument("--strategy", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--trace", help="write the run trace as JSON")
    p.add_argument("--check", action="store_true", help="assert runtime invariants")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compare", help="run several strategies and tabulate")
    p.add_argument("--env", required=True)
    p.add_argument("--strategies", required=True, help="comma-separated names")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--csv", help="write per-run rows to this file")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("oracle", help="print topology facts about a map")
    p.add_argument("--env", required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="render a trace as ASCII or SVG frames")
    p.add_argument("--trace", required=True)
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--every", type=int, default=1)
    p.add_argument("--out", help="output directory for SVG frames")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BadParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MapError, DispersimError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
