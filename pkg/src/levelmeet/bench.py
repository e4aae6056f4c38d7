"""Edge-scan and wall-time benchmark across generator families.

Counters come from one untimed run per (instance, algorithm); wall time is the
median of ``repetitions`` separate timed runs, so timing never touches the
counters.
"""

from __future__ import annotations

import csv
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Iterable

from levelmeet.bimeet import SearchResult, Status, solve
from levelmeet.generators import GenParams, Kind, generate
from levelmeet.graph import Graph, Query, save_graph
from levelmeet.oracles import bfs_hops, bfs_path, check_constraint, dijkstra
from levelmeet.unweighted import solve_unweighted

CSV_COLUMNS = [
    "instance", "kind", "n", "m", "algo", "status", "cost",
    "edge_scans", "relaxations", "wall_us", "scan_ratio",
]

ALGORITHMS: dict[str, Callable[[Graph, Query], SearchResult]] = {
    "bimeet": solve,
    "dijkstra": dijkstra,
    "bfs": bfs_path,
    "unweighted": solve_unweighted,
}
HOP_ALGORITHMS = {"bfs", "unweighted"}

CLAIMED_RATIO = 2.0
HARD_RATIO = 4.0


class BenchMismatch(AssertionError):
    """Raised when an algorithm disagrees with its oracle on an admissible instance."""

    def __init__(self, message: str, replay: Path | None = None) -> None:
        super().__init__(message if replay is None else f"{message} (replay: {replay})")
        self.replay = replay


@dataclass
class BenchRecord:
    instance: int
    kind: str
    n: int
    m: int
    algo: str
    status: str
    cost: float | None
    edge_scans: int
    relaxations: int
    wall_us: float
    scan_ratio: float
    satisfied: bool = True
    expected_cost: float | None = None

    def row(self) -> list:
        d = asdict(self)
        return [d[c] for c in CSV_COLUMNS]


def verify(g: Graph, q: Query) -> dict:
    """Run the two-front search and Dijkstra side by side.

    ``outcome`` is ``match``, ``wrong_graph`` (flagged on an inadmissible
    graph) or ``mismatch`` (a wrong answer that was not flagged).
    """
    ours = solve(g, q)
    ref = dijkstra(g, q)
    report = check_constraint(g, q)
    if ours.status is Status.WRONG_GRAPH:
        outcome = "mismatch" if report.satisfied else "wrong_graph"
    elif ours.cost == ref.cost:
        outcome = "match"
    else:
        outcome = "mismatch"
    delta = ours.cost - ref.cost if ours.ok and ref.ok else None
    return {
        "bimeet": ours,
        "dijkstra": ref,
        "constraint": report,
        "outcome": outcome,
        "delta": delta,
    }


def family(kind: Kind | str, sizes: Iterable[int], seeds: Iterable[int], **kw) -> list[GenParams]:
    return [GenParams(Kind(kind), n, seed=seed, **kw) for n in sizes for seed in seeds]


def _bench_instance(job) -> list[BenchRecord]:
    idx, params, algorithms, repetitions, replay_dir = job
    g, q = generate(params)
    satisfied = check_constraint(g, q).satisfied
    weighted_ref = dijkstra(g, q).cost
    hop_ref = bfs_hops(g, q.s)[q.t]
    if hop_ref == float("inf"):
        hop_ref = None
    records = []
    for name in algorithms:
        fn = ALGORITHMS[name]
        res = fn(g, q)
        times = []
        for _ in range(repetitions):
            t0 = time.perf_counter()
            fn(g, q)
            times.append((time.perf_counter() - t0) * 1e6)
        expected = hop_ref if name in HOP_ALGORITHMS else weighted_ref
        must_match = satisfied or name in HOP_ALGORITHMS or name == "dijkstra"
        if must_match and res.cost != expected:
            replay = None
            if replay_dir is not None:
                replay = Path(replay_dir) / f"mismatch_{idx}_{name}.gr"
                save_graph(g, replay)
            raise BenchMismatch(
                f"instance {idx} ({params}): {name} cost {res.cost} != oracle {expected}", replay
            )
        records.append(BenchRecord(
            instance=idx,
            kind=params.kind.value,
            n=g.n,
            m=g.m,
            algo=name,
            status=res.status.value,
            cost=res.cost,
            edge_scans=res.counters.edge_scans,
            relaxations=res.counters.relaxations,
            wall_us=round(statistics.median(times), 3),
            scan_ratio=res.counters.edge_scans / g.m if g.m else 0.0,
            satisfied=satisfied,
            expected_cost=expected,
        ))
    return records


def run_benchmark(
    families: list[GenParams],
    algorithms: list[str] = ("bimeet", "dijkstra"),
    repetitions: int = 5,
    *,
    workers: int = 1,
    replay_dir: str | Path | None = None,
) -> list[BenchRecord]:
    """One record per (instance, algorithm), ordered by instance then algorithm order."""
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    unknown = set(algorithms) - ALGORITHMS.keys()
    if unknown:
        raise ValueError(f"unknown algorithms: {sorted(unknown)}")
    jobs = [(i, p, list(algorithms), repetitions, replay_dir) for i, p in enumerate(families)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_bench_instance, jobs))
    else:
        chunks = [_bench_instance(j) for j in jobs]
    return [r for chunk in chunks for r in chunk]


def write_csv(records: list[BenchRecord], path: str | Path) -> None:
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow(r.row())


def summarize(records: list[BenchRecord]) -> list[dict]:
    """Per (kind, algo): median and max scan ratio, and whether 2m / 4m held."""
    groups: dict[tuple[str, str], list[BenchRecord]] = {}
    for r in records:
        groups.setdefault((r.kind, r.algo), []).append(r)
    out = []
    for (kind, algo), rs in sorted(groups.items()):
        ratios = [r.scan_ratio for r in rs]
        out.append({
            "kind": kind,
            "algo": algo,
            "instances": len(rs),
            "median_scan_ratio": statistics.median(ratios),
            "max_scan_ratio": max(ratios),
            "claim_2m_held": all(x <= CLAIMED_RATIO for x in ratios),
            "bound_4m_held": all(x <= HARD_RATIO for x in ratios),
            "wrong_graph": sum(r.status == Status.WRONG_GRAPH.value for r in rs),
            "cost_mismatch": sum(
                r.status == Status.OK.value and r.cost != r.expected_cost for r in rs
            ),
            "median_wall_us": statistics.median(r.wall_us for r in rs),
        })
    return out
