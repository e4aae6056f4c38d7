"""Undirected non-negative weighted graphs and the line-oriented graph file format.

File format (1-based vertex ids, LF newlines, ASCII)::

    c <comment>
    p sp <n> <m>
    e <u> <v> <w>        undirected edge, integer w >= 0
    a <u> <v> <w>        DIMACS arc, read as an undirected edge

Internally vertices are dense 0-based integers.
"""

from __future__ import annotations

import io
import math
from collections import deque
from typing import Iterable, NamedTuple, TextIO

UNREACHED = math.inf


class Query(NamedTuple):
    s: int
    t: int


class GraphParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.message = message


class Graph:
    """Immutable undirected graph.

    Edges are normalized on construction: self-loops are dropped and parallel
    edges collapse to their minimum weight. Each edge is stored once as
    ``(u, v, w)`` with ``u < v``, in order of first appearance; adjacency lists
    follow that same order.
    """

    __slots__ = ("n", "edges", "adj", "dropped_self_loops", "merged_parallel")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        index: dict[tuple[int, int], int] = {}
        kept: list[list] = []
        loops = merged = 0
        for u, v, w in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if not math.isfinite(w) or w < 0:
                raise ValueError(f"edge ({u}, {v}) has invalid weight {w!r}")
            if u == v:
                loops += 1
                continue
            key = (u, v) if u < v else (v, u)
            i = index.get(key)
            if i is None:
                index[key] = len(kept)
                kept.append([key[0], key[1], w])
            else:
                merged += 1
                if w < kept[i][2]:
                    kept[i][2] = w
        self.n = n
        self.edges: tuple[tuple[int, int, float], ...] = tuple((u, v, w) for u, v, w in kept)
        adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        self.adj = adj
        self.dropped_self_loops = loops
        self.merged_parallel = merged

    @property
    def m(self) -> int:
        return len(self.edges)

    def weight(self, u: int, v: int) -> float:
        for x, w in self.adj[u]:
            if x == v:
                return w
        raise KeyError((u, v))

    def path_cost(self, path: list[int]) -> float:
        return sum(self.weight(a, b) for a, b in zip(path, path[1:]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and sorted(self.edges) == sorted(other.edges)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def check_query(g: Graph, q: Query | tuple[int, int]) -> Query:
    s, t = q
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError(f"query ({s}, {t}) out of range for n={g.n}")
    return Query(s, t)


def parse_graph(source: str | TextIO) -> Graph:
    """Parse the text format. Raises GraphParseError naming the bad line."""
    lines = io.StringIO(source) if isinstance(source, str) else source
    n = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphParseError(lineno, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "sp":
                raise GraphParseError(lineno, "expected 'p sp <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError(lineno, "non-integer vertex or edge count") from None
            if n < 0 or m < 0:
                raise GraphParseError(lineno, "negative vertex or edge count")
        elif tag in ("e", "a"):
            if n is None:
                raise GraphParseError(lineno, "edge line before problem line")
            if len(parts) != 4:
                raise GraphParseError(lineno, f"expected '{tag} <u> <v> <w>'")
            try:
                u, v, w = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError(lineno, "non-integer field") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(lineno, f"vertex index out of range 1..{n}")
            if w < 0:
                raise GraphParseError(lineno, f"negative weight {w}")
            edges.append((u - 1, v - 1, w))
        else:
            raise GraphParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise GraphParseError(0, "missing problem line")
    return Graph(n, edges)


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as f:
        return parse_graph(f)


def write_graph(g: Graph) -> str:
    out = [f"p sp {g.n} {g.m}\n"]
    out.extend(f"e {u + 1} {v + 1} {_fmt(w)}\n" for u, v, w in g.edges)
    return "".join(out)


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(write_graph(g))


def _fmt(w: float) -> str:
    if isinstance(w, float):
        if not w.is_integer():
            raise ValueError(f"file format holds integer weights only, got {w}")
        w = int(w)
    return str(w)


def validate_connected(g: Graph, q: Query | tuple[int, int]) -> bool:
    """True iff t is reachable from s."""
    s, t = check_query(g, q)
    if s == t:
        return True
    seen = [False] * g.n
    seen[s] = True
    todo = deque([s])
    while todo:
        u = todo.popleft()
        for v, _ in g.adj[u]:
            if not seen[v]:
                if v == t:
                    return True
                seen[v] = True
                todo.append(v)
    return False
