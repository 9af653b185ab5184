"""Command-line interface.

Exit codes: 0 answered (hole or none), 2 not claw-free, 3 parse/usage
error, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import kernels
from .decomposition import decomposition_from_json
from .errors import (
    BudgetExceeded,
    DecompositionFailed,
    InternalInconsistency,
    OddHoleError,
    ParseError,
)
from .generators import circulant, gen_clawfree, random_cubic, _rng
from .graphs import Multigraph, SimpleGraph, parse_graph, serialize_dimacs
from .linegraph import line_graph
from .oracle import oracle_shortest_odd_hole
from .pipeline import shortest_odd_hole


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _parse_input(text: str, fmt: str):
    if fmt == "dimacs" and text.lstrip().startswith("{"):
        raise ParseError("input looks like JSON but --format dimacs was given")
    if fmt == "json" and not text.lstrip().startswith("{"):
        raise ParseError("input is not JSON but --format json was given")
    return parse_graph(text)


def _cmd_find(args) -> int:
    try:
        g = _parse_input(_read_text(args.file), args.format)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if isinstance(g, Multigraph):
        print("error: find expects a simple graph (p edge / multi=false)", file=sys.stderr)
        return 3

    decomposition = None
    if args.decomposition:
        try:
            decomposition = decomposition_from_json(_read_text(args.decomposition), g)
        except (OSError, ValueError, KeyError) as exc:
            print(f"error: bad decomposition file: {exc}", file=sys.stderr)
            return 3

    try:
        if args.oracle:
            hole = oracle_shortest_odd_hole(g)
            kind = "hole" if hole is not None else "none"
        else:
            result = shortest_odd_hole(g, decomposition=decomposition)
            kind = result.kind
            hole = result.hole
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InternalInconsistency, DecompositionFailed) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 4

    if kind == "not-claw-free":
        if args.json_out:
            print(json.dumps({"hole": None, "claw": list(result.claw)}))
        else:
            print(f"not claw-free: claw at {result.claw}")
        return 2
    if hole is None:
        print(json.dumps({"hole": None}) if args.json_out else "no odd hole")
        return 0
    if args.json_out:
        print(json.dumps({"hole": list(hole.vertices), "length": len(hole)}))
    else:
        print(f"odd hole of length {len(hole)}: {' '.join(map(str, hole.vertices))}")
    if args.certify:
        hole.validate(g)
        print("certificate checked against the input adjacency: valid", file=sys.stderr)
    return 0


def _cmd_gen(args) -> int:
    try:
        g = gen_clawfree(args.seed, args.n, args.mode)
    except OddHoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(serialize_dimacs(g))
    return 0


def _bench_instance(family: str, size: int, seed) -> SimpleGraph:
    rng = _rng(seed, "bench", family, size)
    if family == "line":
        n_h = max(4, (size // 3) & ~1)
        h = random_cubic(rng, n_h)
        g, _ = line_graph(h)
        return g
    if family == "circular":
        width = 2 + size % 2
        return circulant(max(size, 3 * width + 1), range(1, width + 1))
    raise ValueError(f"unknown family {family!r}")


def _timed_run(g: SimpleGraph):
    t0 = time.perf_counter()
    result = shortest_odd_hole(g)
    return time.perf_counter() - t0, result


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if not sizes:
        print("error: --sizes must list at least one size", file=sys.stderr)
        return 3
    # warm the jit kernels off the clock
    _timed_run(_bench_instance(args.family, max(12, min(sizes) // 10), args.seed))
    rows = []
    over_budget = False
    for size in sizes:
        g = _bench_instance(args.family, size, args.seed)
        elapsed, result = _timed_run(g)
        backend = "numba" if kernels.using_numba() else "numpy"
        rows.append((size, g.n, g.m, elapsed, result.length, backend))
        note = ""
        if args.budget and elapsed > args.budget:
            over_budget = True
            note = f"  OVER BUDGET ({args.budget}s)"
        print(
            f"size={size} n={g.n} m={g.m} time={elapsed:.3f}s "
            f"result={result.length} backend={backend}{note}"
        )
        if args.compare_kernels:
            kernels.set_backend(not kernels.USE_NUMBA)
            elapsed2, result2 = _timed_run(g)
            backend2 = "numba" if kernels.using_numba() else "numpy"
            kernels.set_backend(not kernels.USE_NUMBA)
            agree = "agree" if result2.length == result.length else "DISAGREE"
            print(
                f"  vs backend={backend2}: time={elapsed2:.3f}s "
                f"result={result2.length} ({agree})"
            )
    if len(rows) >= 2:
        xs = [math.log(r[2]) for r in rows]
        ys = [math.log(max(r[3], 1e-9)) for r in rows]
        mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
        denom = sum((x - mx) ** 2 for x in xs)
        slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / denom if denom else 0.0
        print(f"fitted runtime exponent in m: {slope:.2f}")
    return 1 if over_budget else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="oddhole",
        description="Find a smallest odd hole in a claw-free graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_find = sub.add_parser("find", help="find a smallest odd hole or certify none")
    p_find.add_argument("file", help="graph file, or - for stdin")
    p_find.add_argument("--format", choices=("dimacs", "json"), default="auto")
    p_find.add_argument("--decomposition", help="JSON strip decomposition to reuse")
    p_find.add_argument("--oracle", action="store_true", help="run the brute-force oracle")
    p_find.add_argument("--certify", action="store_true", help="re-validate the certificate")
    p_find.add_argument("--json-out", action="store_true")
    p_find.set_defaults(func=_cmd_find)

    p_gen = sub.add_parser("gen", help="emit a deterministic claw-free instance")
    p_gen.add_argument("--mode", choices=("line", "quasiline", "reject"), required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="time the pipeline on scaling families")
    p_bench.add_argument("--family", choices=("line", "circular"), required=True)
    p_bench.add_argument("--sizes", required=True, help="comma-separated sizes")
    p_bench.add_argument("--budget", type=float, default=0.0, help="per-size budget in seconds")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--compare-kernels", action="store_true")
    p_bench.set_defaults(func=_cmd_bench)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
