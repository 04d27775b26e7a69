"""Deterministic graph generators for corpora."""

from __future__ import annotations

import random
from typing import Optional

from .errors import GraphError
from .graph import MultiGraph
from .packing import is_tree_connected


def complete(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph.from_pairs(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return MultiGraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph.from_pairs(10, outer + spokes + inner)


def doubled(g: MultiGraph, times: int = 2) -> MultiGraph:
    """Every edge repeated ``times`` times; copy ``j`` of edge i gets id ``j*|E| + i``."""
    pairs = [(u, v) for _, u, v in sorted(g.edges)]
    return MultiGraph.from_pairs(g.n, pairs * times)


def random_multigraph(n: int, num_edges: int, seed: int) -> MultiGraph:
    if n < 2 and num_edges:
        raise GraphError("edges need at least two vertices")
    rng = random.Random(seed)
    return MultiGraph.from_pairs(n, [tuple(rng.sample(range(n), 2)) for _ in range(num_edges)])


def wilson_tree(adj: list[list[int]], rng: random.Random, root: int = 0) -> list[tuple[int, int]]:
    """Uniform random spanning tree of a connected simple graph (loop-erased walks)."""
    n = len(adj)
    in_tree = [False] * n
    in_tree[root] = True
    nxt = [-1] * n
    for start in range(n):
        v = start
        while not in_tree[v]:
            nxt[v] = rng.choice(adj[v])
            v = nxt[v]
        v = start
        while not in_tree[v]:
            in_tree[v] = True
            v = nxt[v]
    return [(v, nxt[v]) for v in range(n) if v != root]


def _random_union(n: int, adj: list[list[int]], m: int, extra: int, rng: random.Random) -> MultiGraph:
    pairs = []
    for _ in range(m):
        pairs.extend(wilson_tree(adj, rng))
    candidates = [(u, v) for u in range(n) for v in adj[u] if u < v]
    pairs.extend(rng.choice(candidates) for _ in range(extra))
    g = MultiGraph.from_pairs(n, pairs)
    assert is_tree_connected(g, m)
    return g


def random_tree_connected(n: int, m: int, extra: int = 0, seed: int = 0) -> MultiGraph:
    """Union of ``m`` uniform random spanning trees of K_n plus ``extra`` random edges."""
    if n < 2:
        raise GraphError("need at least two vertices")
    adj = [[w for w in range(n) if w != v] for v in range(n)]
    return _random_union(n, adj, m, extra, random.Random(seed))


def random_bipartite_tree_connected(a: int, b: int, m: int, extra: int = 0, seed: int = 0) -> MultiGraph:
    """Union of ``m`` uniform random spanning trees of K_{a,b} plus ``extra`` random edges."""
    if a < 1 or b < 1:
        raise GraphError("both sides must be nonempty")
    n = a + b
    adj = [list(range(a, n)) if v < a else list(range(a)) for v in range(n)]
    return _random_union(n, adj, m, extra, random.Random(seed))


GENERATORS = {
    "complete": lambda p, seed: complete(p["n"]),
    "complete_bipartite": lambda p, seed: complete_bipartite(p["a"], p["b"]),
    "cycle": lambda p, seed: cycle(p["n"]),
    "path": lambda p, seed: path(p["n"]),
    "petersen": lambda p, seed: petersen(),
    "random_multigraph": lambda p, seed: random_multigraph(p["n"], p["edges"], seed),
    "random_tree_connected": lambda p, seed: random_tree_connected(p["n"], p["m"], p.get("extra", 0), seed),
    "random_bipartite_tree_connected": lambda p, seed: random_bipartite_tree_connected(
        p["a"], p["b"], p["m"], p.get("extra", 0), seed
    ),
}


def generate(kind: str, params: Optional[dict] = None, seed: int = 0) -> MultiGraph:
    """Build a graph by generator name; ``params['double']`` repeats every edge."""
    params = dict(params or {})
    try:
        build = GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown generator {kind!r}; choose from {sorted(GENERATORS)}") from None
    try:
        g = build(params, seed)
    except KeyError as exc:
        raise GraphError(f"generator {kind!r} needs parameter {exc.args[0]!r}") from None
    times = params.get("double")
    if times:
        g = doubled(g, 2 if times is True else int(times))
    return g
