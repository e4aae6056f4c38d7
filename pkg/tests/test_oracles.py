import math

import pytest
from hypothesis import given, settings

from levelmeet.graph import Graph, Query
from levelmeet.oracles import (
    Verdict,
    Witness,
    bfs_hops,
    bfs_path,
    check_constraint,
    check_constraint_by_table,
    dijkstra,
    enumerate_paths,
    min_cost_by_hops,
)

from conftest import small_graphs

INF = math.inf


def test_dijkstra_examples(triangle):
    assert dijkstra(Graph(2, [(0, 1, 5)]), (0, 1)).cost == 5
    g, q = triangle
    res = dijkstra(g, q)
    assert res.cost == 3 and res.path == [0, 2, 1]
    assert dijkstra(Graph(2), (0, 1)).status.value == "UNREACHABLE"


def test_bfs_hops_star_and_path():
    star = Graph(5, [(0, v, 7) for v in range(1, 5)])
    assert bfs_hops(star, 0) == [0, 1, 1, 1, 1]
    path = Graph(5, [(i, i + 1, 3) for i in range(4)])
    assert bfs_hops(path, 0) == [0, 1, 2, 3, 4]
    assert bfs_hops(Graph(3, [(0, 1, 1)]), 0) == [0, 1, INF]


def test_bfs_path_counts_and_stops_early():
    path = Graph(5, [(i, i + 1, 3) for i in range(4)])
    res = bfs_path(path, (0, 2))
    assert res.path == [0, 1, 2] and res.cost == 2
    assert res.counters.edge_scans < 2 * path.m


def test_enumerate_paths_examples(triangle):
    assert enumerate_paths(Graph(2, [(0, 1, 4)]), (0, 1)) == [([0, 1], 4)]
    g, q = triangle
    assert enumerate_paths(g, q) == [([0, 2, 1], 3), ([0, 1], 10)]
    k4 = Graph(4, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)])
    assert len(enumerate_paths(k4, (0, 1))) == 5


def test_enumerate_paths_refuses_large():
    with pytest.raises(ValueError):
        enumerate_paths(Graph(13), (0, 1))


def test_min_cost_by_hops_examples(triangle):
    table = min_cost_by_hops(Graph(2, [(0, 1, 5)]), 0)
    assert table[1][1] == 5 and table[0][1] == INF and table[0][0] == 0
    g, _ = triangle
    table = min_cost_by_hops(g, 0)
    assert table[1][1] == 10 and table[2][1] == 3
    assert len(table) == g.n


def test_check_constraint_uniform_is_satisfied():
    g = Graph(6, [(0, 1, 2), (1, 2, 2), (2, 3, 2), (0, 3, 2), (3, 4, 2), (4, 5, 2), (1, 5, 2)])
    assert check_constraint(g, (0, 5)).verdict is Verdict.SATISFIED


def test_check_constraint_triangle_witness(triangle):
    g, q = triangle
    rep = check_constraint(g, q)
    assert rep.verdict is Verdict.VIOLATED
    assert rep.witness == Witness(1, 3, 1, 2)
    assert rep.to_dict() == {"verdict": "VIOLATED", "witness": {"w": 2, "cheap_cost": 3, "kmin": 1, "k": 2}}
    assert check_constraint(Graph(2, [(0, 1, 1)]), (0, 1)).to_dict() == {"verdict": "SATISFIED", "witness": None}


def test_check_constraint_looks_from_t_too():
    # fine from s=5; from t=4, vertex 0 costs 7 directly but 5 via 4-5-0
    g = Graph(6, [(0, 5, 4), (2, 3, 4), (0, 4, 7), (2, 4, 2), (4, 5, 1), (2, 5, 1), (1, 3, 5)])
    rep = check_constraint(g, Query(5, 4))
    assert rep.verdict is Verdict.VIOLATED
    assert rep.root == 4
    assert rep.witness == Witness(0, 5, 1, 2)


@settings(max_examples=400)
@given(small_graphs())
def test_fast_checker_matches_hop_table(gq):
    g, q = gq
    assert check_constraint(g, q) == check_constraint_by_table(g, q)


@settings(max_examples=200)
@given(small_graphs(max_n=8))
def test_dijkstra_matches_brute_force(gq):
    g, q = gq
    paths = enumerate_paths(g, q)
    res = dijkstra(g, q)
    if paths:
        assert res.cost == paths[0][1]
        assert g.path_cost(res.path) == res.cost
    else:
        assert not res.ok


@settings(max_examples=200)
@given(small_graphs())
def test_bfs_is_unit_weight_dijkstra(gq):
    g, q = gq
    unit = Graph(g.n, [(u, v, 1) for u, v, _ in g.edges])
    hops = bfs_hops(g, q.s)
    for w in range(g.n):
        d = dijkstra(unit, (q.s, w))
        assert hops[w] == (d.cost if d.ok else INF)
