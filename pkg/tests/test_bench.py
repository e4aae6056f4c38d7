import csv

import pytest

from levelmeet import bench
from levelmeet.bench import BenchMismatch, family, run_benchmark, summarize, verify, write_csv
from levelmeet.bimeet import SearchResult, Status
from levelmeet.generators import GenParams, Kind, generate
from levelmeet.plotting import plot_benchmark


def test_layered_bimeet_matches_dijkstra():
    recs = run_benchmark(family("layered", [10, 80], range(5)), ["bimeet", "dijkstra"], 1)
    assert len(recs) == 20
    by = {(r.instance, r.algo): r for r in recs}
    for i in range(10):
        assert by[(i, "bimeet")].status == "OK"
        assert by[(i, "bimeet")].cost == by[(i, "dijkstra")].cost
        assert 0 < by[(i, "bimeet")].scan_ratio <= bench.HARD_RATIO


def test_record_order_is_instance_then_algo():
    recs = run_benchmark(family("grid", [16], range(3)), ["dijkstra", "bimeet", "bfs"], 1)
    assert [(r.instance, r.algo) for r in recs] == [
        (i, a) for i in range(3) for a in ("dijkstra", "bimeet", "bfs")
    ]


def test_adversarial_records_status_and_deviation():
    recs = run_benchmark(family("adversarial", [12, 30], range(6)), ["bimeet"], 1)
    for r in recs:
        assert r.status in {"WRONG_GRAPH", "OK"}
        if r.status == "OK":
            assert r.cost > r.expected_cost
    row = summarize(recs)[0]
    assert row["wrong_graph"] + row["cost_mismatch"] == len(recs)


def test_counters_deterministic_and_independent_of_reps():
    fam = family("random", [50], range(4))
    a = run_benchmark(fam, ["bimeet", "unweighted"], 1)
    b = run_benchmark(fam, ["bimeet", "unweighted"], 3)
    assert [(r.edge_scans, r.relaxations) for r in a] == [(r.edge_scans, r.relaxations) for r in b]


def test_parallel_workers_same_records():
    fam = family("layered", [30], range(4))
    a = run_benchmark(fam, ["bimeet"], 1)
    b = run_benchmark(fam, ["bimeet"], 1, workers=2)
    assert [r.row()[:9] for r in a] == [r.row()[:9] for r in b]


def test_mismatch_aborts_with_replay(tmp_path, monkeypatch):
    def broken(g, q):
        return SearchResult(Status.OK, [q.s, q.t], -1)

    monkeypatch.setitem(bench.ALGORITHMS, "bimeet", broken)
    with pytest.raises(BenchMismatch) as err:
        run_benchmark(family("layered", [10], [0]), ["bimeet"], 1, replay_dir=tmp_path)
    assert err.value.replay.exists()
    assert err.value.replay.read_text().startswith("p sp 10 ")


def test_bad_arguments():
    with pytest.raises(ValueError):
        run_benchmark(family("layered", [10], [0]), ["nope"], 1)
    with pytest.raises(ValueError):
        run_benchmark(family("layered", [10], [0]), ["bimeet"], 0)


def test_csv_header_and_rows(tmp_path):
    recs = run_benchmark(family("layered", [10], range(2)), ["bimeet", "bfs"], 1)
    out = tmp_path / "b.csv"
    write_csv(recs, out)
    rows = list(csv.reader(out.open()))
    assert rows[0] == "instance,kind,n,m,algo,status,cost,edge_scans,relaxations,wall_us,scan_ratio".split(",")
    assert len(rows) == 5
    assert rows[1][:5] == ["0", "layered", "10", str(recs[0].m), "bimeet"]


def test_figure_written(tmp_path):
    recs = run_benchmark(family("layered", [10, 40], range(2)), ["bimeet", "dijkstra"], 1)
    path = plot_benchmark(recs, tmp_path / "b.png")
    assert path.stat().st_size > 1000
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_verify_outcomes(triangle):
    g, q = triangle
    assert verify(g, q)["outcome"] == "match"
    g, q = generate(GenParams(Kind.LAYERED, 40, seed=1))
    v = verify(g, q)
    assert v["outcome"] == "match" and v["delta"] == 0
