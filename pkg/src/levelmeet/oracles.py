"""Reference answers used to check the two-front search.

Nothing here shares code with :mod:`levelmeet.bimeet`.
"""

from __future__ import annotations

import heapq
import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from levelmeet.bimeet import OpCounters, SearchResult, Status
from levelmeet.graph import UNREACHED, Graph, Query, check_query


def dijkstra(g: Graph, q: Query | tuple[int, int]) -> SearchResult:
    """Binary-heap Dijkstra from s, stopping once t is settled."""
    s, t = check_query(g, q)
    c = OpCounters()
    dist = [UNREACHED] * g.n
    parent: list[int | None] = [None] * g.n
    done = [False] * g.n
    dist[s] = 0
    heap = [(0, s)]
    c.enqueues += 1
    while heap:
        d, u = heapq.heappop(heap)
        c.dequeues += 1
        if done[u]:
            continue
        done[u] = True
        if u == t:
            path = [t]
            while path[-1] != s:
                path.append(parent[path[-1]])
            path.reverse()
            return SearchResult(Status.OK, path, d, c)
        for v, w in g.adj[u]:
            c.edge_scans += 1
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                parent[v] = u
                c.relaxations += 1
                heapq.heappush(heap, (nd, v))
                c.enqueues += 1
    return SearchResult(Status.UNREACHABLE, counters=c)


def dijkstra_distances(g: Graph, root: int) -> tuple[list[float], list[float]]:
    """All distances from ``root`` plus, per vertex, the fewest hops on a cheapest path.

    Keys are (cost, hops) pairs compared lexicographically; both parts only
    grow along an edge, so the usual settling argument still holds.
    """
    dist = [UNREACHED] * g.n
    hops = [UNREACHED] * g.n
    dist[root] = 0
    hops[root] = 0
    done = [False] * g.n
    heap = [(0, 0, root)]
    while heap:
        d, k, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in g.adj[u]:
            key = (d + w, k + 1)
            if key < (dist[v], hops[v]):
                dist[v], hops[v] = key
                heapq.heappush(heap, (key[0], key[1], v))
    return dist, hops


def bfs_hops(g: Graph, s: int) -> list[float]:
    """Minimum edge count from ``s`` to every vertex (``inf`` if unreachable)."""
    hops = [UNREACHED] * g.n
    hops[s] = 0
    todo = deque([s])
    while todo:
        u = todo.popleft()
        for v, _ in g.adj[u]:
            if hops[v] == UNREACHED:
                hops[v] = hops[u] + 1
                todo.append(v)
    return hops


def bfs_path(g: Graph, q: Query | tuple[int, int]) -> SearchResult:
    """Plain one-sided BFS with counters; stops as soon as t is discovered."""
    s, t = check_query(g, q)
    c = OpCounters()
    if s == t:
        return SearchResult(Status.OK, [s], 0, c)
    parent: list[int | None] = [None] * g.n
    seen = [False] * g.n
    seen[s] = True
    todo = deque([s])
    c.enqueues += 1
    while todo:
        u = todo.popleft()
        c.dequeues += 1
        for v, _ in g.adj[u]:
            c.edge_scans += 1
            if seen[v]:
                continue
            seen[v] = True
            parent[v] = u
            c.relaxations += 1
            if v == t:
                path = [t]
                while path[-1] != s:
                    path.append(parent[path[-1]])
                path.reverse()
                return SearchResult(Status.OK, path, len(path) - 1, c)
            todo.append(v)
            c.enqueues += 1
    return SearchResult(Status.UNREACHABLE, counters=c)


def enumerate_paths(g: Graph, q: Query | tuple[int, int], cap: int = 12) -> list[tuple[list[int], float]]:
    """Every simple s-t path with its cost, sorted by (cost, path)."""
    if g.n > cap:
        raise ValueError(f"refusing to enumerate paths on n={g.n} > cap={cap}")
    s, t = check_query(g, q)
    if s == t:
        return [([s], 0)]
    found = []
    on_path = [False] * g.n
    path = [s]
    on_path[s] = True

    def extend(u: int, cost: float) -> None:
        for v, w in g.adj[u]:
            if on_path[v]:
                continue
            if v == t:
                found.append((path + [t], cost + w))
                continue
            on_path[v] = True
            path.append(v)
            extend(v, cost + w)
            path.pop()
            on_path[v] = False

    extend(s, 0)
    found.sort(key=lambda pc: (pc[1], pc[0]))
    return found


def min_cost_by_hops(g: Graph, root: int) -> list[list[float]]:
    """``table[k][w]``: cheapest walk from ``root`` to ``w`` using exactly k edges.

    Walks rather than simple paths: with non-negative weights the minimum over
    k is still the true distance, and the table stays polynomial (O(n*m)).
    """
    n = g.n
    row = [UNREACHED] * n
    row[root] = 0
    table = [row]
    for _ in range(max(n - 1, 0)):
        nxt = [UNREACHED] * n
        for u, v, w in g.edges:
            if row[u] + w < nxt[v]:
                nxt[v] = row[u] + w
            if row[v] + w < nxt[u]:
                nxt[u] = row[v] + w
        table.append(nxt)
        row = nxt
    return table


class Verdict(str, Enum):
    SATISFIED = "SATISFIED"
    VIOLATED = "VIOLATED"


class Witness(NamedTuple):
    w: int
    cheap_cost: float
    kmin: int
    k: int


@dataclass
class ConstraintReport:
    verdict: Verdict
    witness: Witness | None = None
    root: int | None = None

    @property
    def satisfied(self) -> bool:
        return self.verdict is Verdict.SATISFIED

    def to_dict(self) -> dict:
        wit = None
        if self.witness is not None:
            w, cheap, kmin, k = self.witness
            wit = {"w": w + 1, "cheap_cost": cheap, "kmin": kmin, "k": k}
        return {"verdict": self.verdict.value, "witness": wit}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def check_constraint(g: Graph, q: Query | tuple[int, int]) -> ConstraintReport:
    """Is there a vertex where more hops buy a strictly lower cost?

    For each root in (s, t) compares the cheapest cost among minimum-hop paths
    with the overall distance. Runs in O(m log n). The witness is the first
    offending vertex by id (root s before root t), its distance, its minimum
    hop count, and the fewest hops of any cheapest path.
    """
    s, t = check_query(g, q)
    for root in (s, t) if s != t else (s,):
        dist, cheap_hops = dijkstra_distances(g, root)
        best_min_hop = _cheapest_min_hop(g, root)
        hops = bfs_hops(g, root)
        for w in range(g.n):
            if dist[w] < best_min_hop[w]:
                return ConstraintReport(
                    Verdict.VIOLATED, Witness(w, dist[w], hops[w], cheap_hops[w]), root
                )
    return ConstraintReport(Verdict.SATISFIED)


def check_constraint_by_table(g: Graph, q: Query | tuple[int, int]) -> ConstraintReport:
    """Same verdict and witness as :func:`check_constraint`, read off the hop table.

    O(n*m) per root; meant for small graphs and for cross-checking.
    """
    s, t = check_query(g, q)
    for root in (s, t) if s != t else (s,):
        table = min_cost_by_hops(g, root)
        for w in range(g.n):
            ks = [k for k in range(len(table)) if table[k][w] != UNREACHED]
            if not ks:
                continue
            kmin = ks[0]
            best = min(table[k][w] for k in ks)
            if best < table[kmin][w]:
                k = next(k for k in ks if table[k][w] == best)
                return ConstraintReport(Verdict.VIOLATED, Witness(w, best, kmin, k), root)
    return ConstraintReport(Verdict.SATISFIED)


def _cheapest_min_hop(g: Graph, root: int) -> list[float]:
    # cost relaxation restricted to BFS-layer-increasing edges
    hops = [UNREACHED] * g.n
    cost = [UNREACHED] * g.n
    hops[root] = 0
    cost[root] = 0
    todo = deque([root])
    while todo:
        u = todo.popleft()
        for v, w in g.adj[u]:
            if hops[v] == UNREACHED:
                hops[v] = hops[u] + 1
                todo.append(v)
            if hops[v] == hops[u] + 1 and cost[u] + w < cost[v]:
                cost[v] = cost[u] + w
    return cost
