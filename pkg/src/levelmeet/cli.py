"""Command-line front end.

Vertex ids are 1-based on the command line and in every JSON document.
Machine-readable output goes to stdout, messages to stderr.

Exit codes:
    0  success (OK / SATISFIED / verify match)
    1  usage or parse error
    2  solve: t unreachable from s
    3  solve: WRONG_GRAPH
    4  verify: two-front search returned a wrong cost without flagging it
    5  check: constraint VIOLATED
    6  I/O error
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from levelmeet import bench
from levelmeet.bimeet import Status
from levelmeet.generators import GenParams, Kind, generate
from levelmeet.graph import GraphParseError, Query, read_graph, write_graph
from levelmeet.oracles import check_constraint

log = logging.getLogger("levelmeet")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNREACHABLE = 2
EXIT_WRONG_GRAPH = 3
EXIT_MISMATCH = 4
EXIT_VIOLATED = 5
EXIT_IO = 6

SOLVE_EXIT = {
    Status.OK: EXIT_OK,
    Status.UNREACHABLE: EXIT_UNREACHABLE,
    Status.WRONG_GRAPH: EXIT_WRONG_GRAPH,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="compact one-line JSON")
    common.add_argument("-v", "--verbose", action="count", default=0)

    query = _Parser(add_help=False)
    query.add_argument("--graph", required=True, type=Path)
    query.add_argument("--source", required=True, type=int)
    query.add_argument("--target", required=True, type=int)

    params = _Parser(add_help=False)
    params.add_argument("--kind", choices=[k.value for k in Kind], default="layered")
    params.add_argument("--n", type=int, default=100)
    params.add_argument("--density", type=float, default=2.0)
    params.add_argument("--wmin", type=int, default=1)
    params.add_argument("--wmax", type=int, default=100)
    params.add_argument("--seed", type=int, default=0)

    p = _Parser(prog="levelmeet", description="Two-front level-synchronous shortest paths.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common, query], help="solve one s-t query")
    s.add_argument("--algo", choices=list(bench.ALGORITHMS), default="bimeet")

    sub.add_parser("verify", parents=[common, query], help="compare against Dijkstra")
    sub.add_parser("check", parents=[common, query], help="test the hop/cost admissibility condition")

    g = sub.add_parser("gen", parents=[common, params], help="generate an instance")
    g.add_argument("--out", required=True, type=Path)

    b = sub.add_parser("bench", parents=[common, params], help="benchmark algorithms, write CSV + figure")
    b.add_argument("--out", required=True, type=Path)
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--instances", type=int, default=20, help="seeds per size")
    b.add_argument("--sizes", type=lambda x: [int(v) for v in x.split(",")], default=None,
                   help="comma-separated vertex counts (default: --n)")
    b.add_argument("--algos", default="bimeet,dijkstra,bfs,unweighted")
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--no-plot", action="store_true")
    return p


def _emit(obj, args) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(json.dumps(obj, indent=2, sort_keys=True))


def _load_query(args):
    g = read_graph(args.graph)
    for name, v in (("--source", args.source), ("--target", args.target)):
        if not 1 <= v <= g.n:
            raise UsageError(f"{name} {v} out of range 1..{g.n}")
    return g, Query(args.source - 1, args.target - 1)


def _params(args) -> GenParams:
    p = GenParams(Kind(args.kind), args.n, args.density, (args.wmin, args.wmax), args.seed)
    try:
        p.validate()
    except ValueError as e:
        raise UsageError(str(e)) from None
    return p


def cmd_solve(args) -> int:
    g, q = _load_query(args)
    res = bench.ALGORITHMS[args.algo](g, q)
    _emit(res.to_dict(), args)
    if res.status is not Status.OK:
        log.warning("status %s", res.status.value)
    return SOLVE_EXIT[res.status]


def cmd_verify(args) -> int:
    g, q = _load_query(args)
    v = bench.verify(g, q)
    _emit({
        "bimeet": v["bimeet"].to_dict(),
        "dijkstra": v["dijkstra"].to_dict(),
        "constraint": v["constraint"].to_dict(),
        "diff": {"outcome": v["outcome"], "delta": v["delta"]},
    }, args)
    if v["outcome"] == "mismatch":
        log.error("bimeet cost %s != dijkstra cost %s", v["bimeet"].cost, v["dijkstra"].cost)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_check(args) -> int:
    g, q = _load_query(args)
    report = check_constraint(g, q)
    _emit(report.to_dict(), args)
    return EXIT_OK if report.satisfied else EXIT_VIOLATED


def cmd_gen(args) -> int:
    p = _params(args)
    try:
        g, q = generate(p)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if p.kind is Kind.LAYERED:
        expected = "SATISFIED"
    elif p.kind is Kind.ADVERSARIAL:
        expected = "VIOLATED"
    else:
        expected = check_constraint(g, q).verdict.value
    sidecar = {
        "params": p.to_dict(),
        "query": {"s": q.s + 1, "t": q.t + 1},
        "expected_verdict": expected,
    }
    args.out.write_text(write_graph(g), encoding="ascii")
    side = args.out.with_name(args.out.name + ".json")
    side.write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n", encoding="ascii")
    _emit(sidecar, args)
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = args.sizes or [args.n]
    algos = [a for a in args.algos.split(",") if a]
    base = _params(args)
    families = [
        GenParams(base.kind, n, base.density, base.weight_range, base.seed + i)
        for n in sizes
        for i in range(args.instances)
    ]
    for p in families:
        try:
            p.validate()
        except ValueError as e:
            raise UsageError(str(e)) from None
    try:
        records = bench.run_benchmark(
            families, algos, args.reps, workers=args.workers, replay_dir=args.out.parent
        )
    except ValueError as e:
        raise UsageError(str(e)) from None
    bench.write_csv(records, args.out)
    summary = bench.summarize(records)
    result = {"csv": str(args.out), "summary": summary}
    if not args.no_plot:
        from levelmeet.plotting import plot_benchmark

        result["figure"] = str(plot_benchmark(records, args.out.with_suffix(".png")))
    _emit(result, args)
    for row in summary:
        log.info(
            "%s/%s median scan ratio %.3f, claimed 2m %s",
            row["kind"], row["algo"], row["median_scan_ratio"],
            "held" if row["claim_2m_held"] else "NOT held",
        )
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "check": cmd_check,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"levelmeet: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GraphParseError) as e:
        log.error("%s", e)
        return EXIT_USAGE
    except bench.BenchMismatch as e:
        log.error("%s", e)
        return EXIT_MISMATCH
    except OSError as e:
        log.error("%s", e)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
