from hypothesis import given, settings

from levelmeet.bimeet import Status, init_state, drive
from levelmeet.generators import GenParams, Kind, generate
from levelmeet.graph import Graph
from levelmeet.oracles import bfs_hops
from levelmeet.unweighted import solve_unweighted

from conftest import small_graphs


def test_single_edge():
    res = solve_unweighted(Graph(2, [(0, 1, 40)]), (0, 1))
    assert res.cost == 1 and res.path == [0, 1]


def test_path_of_four_edges():
    g = Graph(5, [(0, 2, 9), (2, 3, 9), (3, 4, 9), (4, 1, 9)])
    res = solve_unweighted(g, (0, 1))
    assert res.cost == 4 and res.path == [0, 2, 3, 4, 1]


def test_unreachable_and_trivial():
    assert solve_unweighted(Graph(3, [(0, 2, 1)]), (0, 1)).status is Status.UNREACHABLE
    assert solve_unweighted(Graph(3), (2, 2)).cost == 0


def test_ignores_weights_where_weighted_search_would_not():
    g = Graph(3, [(0, 1, 10), (0, 2, 1), (2, 1, 1)])
    assert solve_unweighted(g, (0, 1)).cost == 1


@settings(max_examples=400)
@given(small_graphs(max_n=12))
def test_matches_bfs(gq):
    g, q = gq
    res = solve_unweighted(g, q)
    hops = bfs_hops(g, q.s)[q.t]
    if res.ok:
        assert res.cost == hops == len(res.path) - 1
        assert all(b in {v for v, _ in g.adj[a]} for a, b in zip(res.path, res.path[1:]))
    else:
        assert res.status is Status.UNREACHABLE and hops == float("inf")


def test_early_stop_scans_no_more_than_full_run():
    for seed in range(50):
        g, q = generate(GenParams(Kind.RANDOM, 60, seed=seed))
        early = solve_unweighted(g, q)
        st = init_state(g, q, unit_weights=True)
        full = drive(st)
        assert early.counters.edge_scans <= full.counters.edge_scans
        assert early.cost == full.cost
