"""Seeded instance generators.

Every generator is a pure function of its :class:`GenParams`; the same params
give a byte-identical graph file on any platform (see :mod:`levelmeet.rng`).

LAYERED
    Road-like hierarchy: ``s`` alone on level 0, ``t`` alone on the last
    level, edges only inside a level or between adjacent levels. Every weight
    is shifted up by ``hi * n`` so hop count dominates cost; a path with more
    hops can never be cheaper, which makes the admissibility check pass.
ADVERSARIAL
    A core gadget in which a heavy single edge competes with a cheap multi-hop
    detour, padded out to ``n`` vertices with pendant trees. Two gadgets:

    ``trap``   -- the detour reaches an already-expanded vertex of the same
                  side, so the search reports WRONG_GRAPH.
    ``shadow`` -- the detour runs through the other side's territory, so the
                  search silently returns a cost above the optimum.
RANDOM
    Erdos-Renyi style edge sample, redrawn until s and t are connected.
GRID
    ``rows x cols`` lattice with uniform weights, ``s``/``t`` at opposite
    corners. ``rows = isqrt(n)``, ``cols = n // rows``, so the vertex count is
    rounded down to ``rows * cols``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from enum import Enum

from levelmeet.graph import Graph, Query, validate_connected
from levelmeet.rng import SplitMix64


class Kind(str, Enum):
    LAYERED = "layered"
    ADVERSARIAL = "adversarial"
    RANDOM = "random"
    GRID = "grid"


@dataclass(frozen=True)
class GenParams:
    kind: Kind
    n: int
    density: float = 2.0
    weight_range: tuple[int, int] = (1, 100)
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "weight_range", tuple(self.weight_range))

    def validate(self) -> None:
        lo, hi = self.weight_range
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if lo < 0 or hi < lo:
            raise ValueError(f"bad weight range {self.weight_range}")
        if self.kind is Kind.LAYERED and lo < 1:
            raise ValueError("layered graphs need weights >= 1")
        if self.kind is Kind.ADVERSARIAL and self.n < MIN_ADVERSARIAL_N:
            raise ValueError(f"adversarial graphs need n >= {MIN_ADVERSARIAL_N}")
        if self.density <= 0:
            raise ValueError("density must be positive")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        d["weight_range"] = list(self.weight_range)
        return d


MIN_ADVERSARIAL_N = 6
RANDOM_MAX_ATTEMPTS = 10_000


def generate(p: GenParams) -> tuple[Graph, Query]:
    return _GENERATORS[p.kind](p)


def gen_layered(p: GenParams) -> tuple[Graph, Query]:
    p.validate()
    rng = SplitMix64(p.seed)
    n = p.n
    lo, hi = p.weight_range
    shift = hi * n
    if n == 2:
        levels = [[0], [1]]
    else:
        depth = min(n, max(3, math.isqrt(n) + 1))
        levels = [[0]] + [[] for _ in range(depth - 2)] + [[n - 1]]
        for v in range(1, n - 1):
            levels[1 + (v - 1) * (depth - 2) // (n - 2)].append(v)
    level_of = {v: i for i, vs in enumerate(levels) for v in vs}

    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int, int]] = []

    def add(u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        if u == v or key in seen:
            return False
        seen.add(key)
        edges.append((key[0], key[1], rng.randint(lo, hi) + shift))
        return True

    for i in range(1, len(levels)):
        for v in levels[i]:
            add(rng.choice(levels[i - 1]), v)

    target = max(n - 1, round(p.density * n))
    for _ in range(20 * target):
        if len(edges) >= target:
            break
        u = rng.below(n)
        i = level_of[u] + rng.below(3) - 1
        if 0 <= i < len(levels):
            add(u, rng.choice(levels[i]))
    return Graph(n, edges), Query(0, n - 1)


def gen_adversarial(p: GenParams) -> tuple[Graph, Query]:
    p.validate()
    rng = SplitMix64(p.seed)
    lo, hi = p.weight_range
    light = lambda: rng.randint(lo, hi)  # noqa: E731
    heavy_pairs: list[tuple[int, int]] = []
    edges: list[tuple[int, int, int]] = []
    s, t = 0, 1

    if p.n >= 8 and rng.below(2) == 0:
        # trap: s -H- h, s - c1 - c2 - h cheap, h - corridor(>=3) - t
        h, c1, c2 = 2, 3, 4
        corridor = list(range(5, 5 + _corridor_len(rng, 3, p.n - 5)))
        heavy_pairs.append((s, h))
        edges += [(s, c1, light()), (c1, c2, light()), (c2, h, light())]
        chain = [h] + corridor + [t]
    else:
        # shadow: s -H- u, s - c1 - c2 - u cheap, c2 -H- t, u - corridor(>=1) - t
        u, c1, c2 = 2, 3, 4
        corridor = list(range(5, 5 + _corridor_len(rng, 1, p.n - 5)))
        heavy_pairs += [(s, u), (c2, t)]
        edges += [(s, c1, light()), (c1, c2, light()), (c2, u, light())]
        chain = [u] + corridor + [t]
    edges += [(a, b, light()) for a, b in zip(chain, chain[1:])]

    core = 5 + len(corridor)
    for v in range(core, p.n):
        edges.append((rng.below(v), v, light()))

    big = 1 + sum(w for _, _, w in edges)
    edges += [(a, b, big) for a, b in heavy_pairs]
    return Graph(p.n, edges), Query(s, t)


def _corridor_len(rng: SplitMix64, least: int, room: int) -> int:
    return rng.randint(least, max(least, min(room, least + 6)))


def gen_random(p: GenParams) -> tuple[Graph, Query]:
    p.validate()
    rng = SplitMix64(p.seed)
    n = p.n
    lo, hi = p.weight_range
    s = rng.below(n)
    t = rng.below(n - 1)
    if t >= s:
        t += 1
    pairs = n * (n - 1) // 2
    target = min(pairs, max(1, round(p.density * n)))
    for _ in range(RANDOM_MAX_ATTEMPTS):
        seen: set[tuple[int, int]] = set()
        edges = []
        while len(edges) < target:
            u, v = rng.below(n), rng.below(n)
            key = (u, v) if u < v else (v, u)
            if u == v or key in seen:
                continue
            seen.add(key)
            edges.append((key[0], key[1], rng.randint(lo, hi)))
        g = Graph(n, edges)
        if validate_connected(g, (s, t)):
            return g, Query(s, t)
    raise ValueError(f"no s-t connected sample in {RANDOM_MAX_ATTEMPTS} draws; raise density")


def gen_grid(p: GenParams) -> tuple[Graph, Query]:
    p.validate()
    rng = SplitMix64(p.seed)
    lo, hi = p.weight_range
    rows = max(1, math.isqrt(p.n))
    cols = p.n // rows
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1, rng.randint(lo, hi)))
            if r + 1 < rows:
                edges.append((v, v + cols, rng.randint(lo, hi)))
    n = rows * cols
    return Graph(n, edges), Query(0, n - 1)


_GENERATORS = {
    Kind.LAYERED: gen_layered,
    Kind.ADVERSARIAL: gen_adversarial,
    Kind.RANDOM: gen_random,
    Kind.GRID: gen_grid,
}
