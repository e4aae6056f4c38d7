"""Two-front level-synchronous search for a single s-t pair.

Side A grows a tree from ``s`` and side B grows one from ``t``. The sides take
turns, each turn draining one whole BFS level of its own frontier. While a
level is drained every adjacency entry of every dequeued vertex is relaxed:

* an untouched (GREEN) neighbour is claimed for the next level;
* a same-side neighbour still waiting in a queue (YELLOW) takes a cheaper
  offer; if it sat on the level being drained it is promoted to the next one;
* a same-side neighbour that was already expanded (RED) and receives a cheaper
  offer means hop order and cost order disagree, and the run stops with
  ``WRONG_GRAPH``;
* a neighbour owned by the other side closes an s-t path through the scanned
  edge, and the cheapest such meet is kept.

Both trees stay intact; the answer is rebuilt by walking parents from the two
endpoints of the best meet edge.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import asdict, dataclass, field
from enum import Enum, IntEnum
from typing import NamedTuple

from levelmeet.graph import UNREACHED, Graph, Query, check_query


class Color(IntEnum):
    GREEN = 0
    YELLOW = 1
    YELLOW_PROMOTED = 2
    RED = 3


class Side(IntEnum):
    A = 0
    B = 1


class Relax(Enum):
    CLAIMED = "claimed"
    IMPROVED_SAME_LEVEL = "improved_same_level"
    IMPROVED = "improved"
    MEET = "meet"
    VIOLATION = "violation"
    NO_CHANGE = "no_change"


class Level(Enum):
    ADVANCED = "advanced"
    EXHAUSTED = "exhausted"
    WRONG_GRAPH = "wrong_graph"
    CONTACT = "contact"


class Run(Enum):
    RUNNING = "RUNNING"
    DONE = "DONE"
    WRONG_GRAPH = "WRONG_GRAPH"
    UNREACHABLE = "UNREACHABLE"


class Status(str, Enum):
    OK = "OK"
    UNREACHABLE = "UNREACHABLE"
    WRONG_GRAPH = "WRONG_GRAPH"


class MeetRecord(NamedTuple):
    p: int  # owned by the scanning side
    h: int  # owned by the other side
    total: float


@dataclass
class OpCounters:
    edge_scans: int = 0
    relaxations: int = 0
    enqueues: int = 0
    dequeues: int = 0
    levels_a: int = 0
    levels_b: int = 0


@dataclass
class SearchResult:
    status: Status
    path: list[int] | None = None
    cost: float | None = None
    counters: OpCounters = field(default_factory=OpCounters)

    @property
    def ok(self) -> bool:
        return self.status is Status.OK

    def to_dict(self) -> dict:
        """JSON-ready form with 1-based vertex ids."""
        cost = self.cost
        if isinstance(cost, float) and cost.is_integer():
            cost = int(cost)
        return {
            "status": self.status.value,
            "cost": cost,
            "path": None if self.path is None else [v + 1 for v in self.path],
            "counters": asdict(self.counters),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class SearchState:
    """Mutable per-query state. Never shared between searches."""

    def __init__(
        self,
        g: Graph,
        q: Query,
        *,
        unit_weights: bool = False,
        stop_at_contact: bool = False,
        update_deeper: bool = True,
        trace: bool = False,
    ) -> None:
        n = g.n
        self.graph = g
        self.s, self.t = q
        self.unit_weights = unit_weights
        self.stop_at_contact = stop_at_contact
        self.update_deeper = update_deeper
        self.color = [Color.GREEN] * n
        self.owner: list[Side | None] = [None] * n
        self.cst: list[float] = [UNREACHED] * n
        self.parent: list[int | None] = [None] * n
        self.dst: list[int | None] = [None] * n
        self.queues: list[deque[int]] = [deque(), deque()]
        self.nexts: list[list[int]] = [[], []]
        self.level = [0, 0]
        self.spcst: float = UNREACHED
        self.best_meet: MeetRecord | None = None
        self.meets: list[MeetRecord] = []
        self.counters = OpCounters()
        self.status = Run.RUNNING
        # (vertex, color, owner, dst) per color change; spcst after each improvement
        self.events: list[tuple] | None = [] if trace else None
        self.spcst_history: list[float] | None = [] if trace else None

    def paint(self, v: int, color: Color) -> None:
        self.color[v] = color
        if self.events is not None:
            self.events.append((v, color, self.owner[v], self.dst[v]))


def init_state(g: Graph, q: Query | tuple[int, int], **options) -> SearchState:
    q = check_query(g, q)
    st = SearchState(g, q, **options)
    s, t = q
    if s == t:
        st.spcst = 0
        st.status = Run.DONE
        return st
    for root, side in ((s, Side.A), (t, Side.B)):
        st.owner[root] = side
        st.cst[root] = 0
        st.dst[root] = 0
        st.paint(root, Color.YELLOW)
        st.queues[side].append(root)
        st.counters.enqueues += 1
    return st


def relax_edge(st: SearchState, side: Side, p: int, h: int, w: float) -> Relax:
    """Examine edge (p, h) of weight ``w`` while ``side`` expands ``p``."""
    st.counters.edge_scans += 1
    if st.unit_weights:
        w = 1
    offer = st.cst[p] + w
    color = st.color[h]

    if color is Color.GREEN:
        st.owner[h] = side
        st.cst[h] = offer
        st.parent[h] = p
        st.dst[h] = st.dst[p] + 1
        st.paint(h, Color.YELLOW)
        st.nexts[side].append(h)
        st.counters.enqueues += 1
        st.counters.relaxations += 1
        return Relax.CLAIMED

    if st.owner[h] is not side:
        total = offer + st.cst[h]
        meet = MeetRecord(p, h, total)
        st.meets.append(meet)
        if total < st.spcst:
            st.spcst = total
            st.best_meet = meet
            if st.spcst_history is not None:
                st.spcst_history.append(total)
        return Relax.MEET

    if st.cst[h] <= offer:
        return Relax.NO_CHANGE

    if color is Color.RED:
        st.status = Run.WRONG_GRAPH
        return Relax.VIOLATION

    if st.dst[h] == st.dst[p]:
        # h waits on the level being drained; its stale entry there is skipped
        st.cst[h] = offer
        st.parent[h] = p
        st.dst[h] = st.dst[p] + 1
        st.paint(h, Color.YELLOW_PROMOTED)
        st.nexts[side].append(h)
        st.counters.enqueues += 1
        st.counters.relaxations += 1
        return Relax.IMPROVED_SAME_LEVEL

    if st.update_deeper and st.dst[h] == st.dst[p] + 1:
        st.cst[h] = offer
        st.parent[h] = p
        st.counters.relaxations += 1
        return Relax.IMPROVED

    return Relax.NO_CHANGE


def run_level(st: SearchState, side: Side) -> Level:
    """Drain the current level of ``side``; its next level becomes current."""
    queue = st.queues[side]
    if not queue:
        return Level.EXHAUSTED
    level = st.level[side]
    adj = st.graph.adj
    counters = st.counters
    while queue:
        u = queue.popleft()
        counters.dequeues += 1
        if st.color[u] is Color.RED or st.dst[u] != level:
            continue
        for v, w in adj[u]:
            outcome = relax_edge(st, side, u, v, w)
            if outcome is Relax.VIOLATION:
                return Level.WRONG_GRAPH
            if outcome is Relax.MEET and st.stop_at_contact:
                st.status = Run.DONE
                return Level.CONTACT
        st.paint(u, Color.RED)
    st.queues[side] = deque(st.nexts[side])
    st.nexts[side] = []
    st.level[side] += 1
    if side is Side.A:
        counters.levels_a += 1
    else:
        counters.levels_b += 1
    return Level.ADVANCED


def reconstruct_path(st: SearchState, m: MeetRecord) -> list[int]:
    """Join the two tree paths through the meet edge, oriented s -> t."""
    first, second = (m.p, m.h) if st.owner[m.p] is Side.A else (m.h, m.p)
    head = _walk_to_root(st, first)
    head.reverse()
    return head + _walk_to_root(st, second)


def _walk_to_root(st: SearchState, v: int) -> list[int]:
    out = [v]
    for _ in range(st.graph.n):
        v = st.parent[v]
        if v is None:
            return out
        out.append(v)
    raise RuntimeError("parent cycle in search tree")


def drive(st: SearchState) -> SearchResult:
    """Alternate A, B turns until both frontiers are exhausted (or a stop)."""
    if st.status is Run.DONE and st.s == st.t:
        return SearchResult(Status.OK, [st.s], 0, st.counters)
    if st.status is Run.WRONG_GRAPH:
        return SearchResult(Status.WRONG_GRAPH, counters=st.counters)
    while st.status is Run.RUNNING and (st.queues[Side.A] or st.queues[Side.B]):
        for side in (Side.A, Side.B):
            outcome = run_level(st, side)
            if outcome is Level.WRONG_GRAPH:
                return SearchResult(Status.WRONG_GRAPH, counters=st.counters)
            if outcome is Level.CONTACT:
                break
    if st.best_meet is None:
        st.status = Run.UNREACHABLE
        return SearchResult(Status.UNREACHABLE, counters=st.counters)
    st.status = Run.DONE
    path = reconstruct_path(st, st.best_meet)
    if st.unit_weights:
        assert len(path) - 1 == st.spcst
    else:
        assert st.graph.path_cost(path) == st.spcst, "meet cost out of sync with trees"
    return SearchResult(Status.OK, path, st.spcst, st.counters)


def solve(g: Graph, q: Query | tuple[int, int], *, update_deeper: bool = True) -> SearchResult:
    """Cheapest s-t path found by the two-front search.

    ``update_deeper=False`` ignores cheaper offers to a same-side vertex that
    is already queued for the next level; kept only for experiments, since it
    returns wrong costs on ordinary graphs.
    """
    return drive(init_state(g, q, update_deeper=update_deeper))
