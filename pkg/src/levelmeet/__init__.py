"""Two-front, level-synchronous single-pair shortest paths on undirected graphs."""

from levelmeet.graph import Graph, GraphParseError, Query, parse_graph, validate_connected, write_graph
from levelmeet.bimeet import SearchResult, Status, solve
from levelmeet.unweighted import solve_unweighted
from levelmeet.oracles import bfs_hops, check_constraint, dijkstra

__all__ = [
    "Graph",
    "GraphParseError",
    "Query",
    "SearchResult",
    "Status",
    "bfs_hops",
    "check_constraint",
    "dijkstra",
    "parse_graph",
    "solve",
    "solve_unweighted",
    "validate_connected",
    "write_graph",
]
