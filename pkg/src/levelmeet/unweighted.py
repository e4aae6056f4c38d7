"""Hop-count variant: every edge costs 1 and the search stops at first contact.

With unit weights both frontiers advance exactly one hop per turn, so the
first edge found between the two trees already closes a minimum-hop path.
"""

from __future__ import annotations

from levelmeet.bimeet import SearchResult, drive, init_state
from levelmeet.graph import Graph, Query


def solve_unweighted(g: Graph, q: Query | tuple[int, int], *, trace: bool = False) -> SearchResult:
    st = init_state(g, q, unit_weights=True, stop_at_contact=True, trace=trace)
    return drive(st)
