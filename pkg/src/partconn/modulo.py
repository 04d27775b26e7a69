"""Bounded-degree bipartite factors from toughness, and connected modulo-k factors."""

from __future__ import annotations

import logging
from typing import Callable, Optional, Sequence

from .certificates import FactorCertificate
from .degree_bounded import DegreeCapProfile, pipeline_cor36, search_capped_factor
from .errors import CapacityError, GraphError, NotTreeConnected, PipelineStall
from .graph import MultiGraph, check_vertices, is_bipartite, is_complete
from .packing import is_tree_connected, minimally_tree_connected
from .toughness import TOUGHNESS_MAX_N, toughness

log = logging.getLogger(__name__)

MODULO_MAX_N = 10
MODULO_MAX_EDGES = 24


def _vertex_order(h: MultiGraph) -> list[int]:
    order, seen = [], set()
    for s in h.vertices:
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for eid in h.incident(v):
                w = h.other_end(eid, v)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def degree_factor_search(h: MultiGraph, allowed: Sequence[Sequence[int]]) -> Optional[frozenset]:
    """Edge set of a connected spanning subgraph with ``deg(v) in allowed[v]`` for all v.

    Backtracking over edges, grouped so each vertex's edges are decided
    together. A branch is cut when some vertex can no longer reach an allowed
    degree with its undecided edges, or when the chosen and undecided edges
    together no longer connect the graph. Returns ``None`` only after the
    whole space is exhausted.
    """
    allowed = [sorted(set(a)) for a in allowed]
    if any(not a for a in allowed):
        return None
    pos = {v: i for i, v in enumerate(_vertex_order(h))}
    edges = sorted(h.edges, key=lambda e: (max(pos[e[1]], pos[e[2]]), min(pos[e[1]], pos[e[2]]), e[0]))
    deg = [0] * h.n
    rem = list(h.degrees())
    chosen: list[int] = []
    status: dict[int, bool] = {}

    def reachable(v):
        lo, hi = deg[v], deg[v] + rem[v]
        return any(lo <= t <= hi for t in allowed[v])

    def connected(include_undecided: bool) -> bool:
        parent = list(range(h.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        pieces = h.n
        for eid, u, v in h.edges:
            if status.get(eid, include_undecided):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    pieces -= 1
        return pieces == 1

    def rec(i):
        if i == len(edges):
            if all(deg[v] in allowed[v] for v in h.vertices) and connected(False):
                return frozenset(chosen)
            return None
        eid, a, b = edges[i]
        rem[a] -= 1
        rem[b] -= 1
        for take in (True, False):
            status[eid] = take
            if take:
                deg[a] += 1
                deg[b] += 1
                chosen.append(eid)
            ok = reachable(a) and reachable(b) and (take or connected(True))
            if ok:
                found = rec(i + 1)
                if found is not None:
                    return found
            if take:
                deg[a] -= 1
                deg[b] -= 1
                chosen.pop()
        del status[eid]
        rem[a] += 1
        rem[b] += 1
        return None

    return rec(0)


def _guard(h: MultiGraph, max_n: Optional[int], max_edges: Optional[int]) -> None:
    if max_n is not None and h.n > max_n:
        raise CapacityError(f"factor search supports n <= {max_n}, got {h.n}")
    if max_edges is not None and h.num_edges > max_edges:
        raise CapacityError(f"factor search supports at most {max_edges} edges, got {h.num_edges}")


def modulo_factor_search(
    h: MultiGraph,
    k: int,
    u: int,
    max_n: int = MODULO_MAX_N,
    max_edges: Optional[int] = MODULO_MAX_EDGES,
) -> Optional[FactorCertificate]:
    """Connected factor with positive degrees divisible by ``k``.

    Every vertex other than ``u`` must also satisfy d_F(v) <= d_h(v) - k + 1.
    ``None`` means no such factor exists.
    """
    if k < 1:
        raise GraphError("k must be a positive integer")
    check_vertices(h, [u])
    if is_bipartite(h) is None:
        raise GraphError("modulo factor search expects a bipartite graph")
    _guard(h, max_n, max_edges)
    allowed = []
    for v in h.vertices:
        cap = h.degree(v) if v == u else h.degree(v) - k + 1
        allowed.append(range(k, cap + 1, k))
    found = degree_factor_search(h, allowed)
    if found is None:
        return None
    return FactorCertificate.build(h, found, k=k, meta={"u": u, "k": k})


def even_connected_factor(
    h: MultiGraph, max_degree: Optional[int] = None, max_n: int = MODULO_MAX_N
) -> Optional[FactorCertificate]:
    """Connected spanning subgraph with every degree positive and even."""
    _guard(h, max_n, None)
    top = h.max_degree() if max_degree is None else max_degree
    allowed = [range(2, min(top, h.degree(v)) + 1, 2) for v in h.vertices]
    found = degree_factor_search(h, allowed)
    if found is None:
        return None
    return FactorCertificate.build(h, found, k=2)


def _hypothesis(g: MultiGraph, tough_needed: int, min_order: int) -> dict:
    status = {"order_ok": g.n >= min_order, "toughness_needed": tough_needed}
    if g.n <= TOUGHNESS_MAX_N:
        report = toughness(g)
        status["toughness"] = "unbounded" if report.unbounded else str(report.value)
        status["tough_ok"] = report.value >= tough_needed
        status["hypothesis_ok"] = status["order_ok"] and status["tough_ok"]
    else:
        status["toughness"] = None
        status["hypothesis_ok"] = None
    return status


def bipartite_bounded_tree_connected(g: MultiGraph, m: int) -> FactorCertificate:
    """Bipartite m-tree-connected factor with maximum degree at most 3m + 1.

    First a 2m-tree-connected factor with maximum degree 4m + 1 is searched
    for, then its edge-maximum bipartite subgraph is thinned to degrees
    ceil(3/4 d(v)) <= 3m + 1. The hypothesis (4m^2-tough, order >= 4m) is
    evaluated and attached but does not gate the search.
    """
    hyp = _hypothesis(g, 4 * m * m, 4 * m)
    try:
        if not is_tree_connected(g, 2 * m):
            raise PipelineStall("2m-factor", f"graph is not {2 * m}-tree-connected")
        first = search_capped_factor(g, 2 * m, DegreeCapProfile.uniform(g.n, 4 * m + 1))
        if first is None:
            raise PipelineStall("2m-factor", f"no {2 * m}-tree-connected factor with degrees <= {4 * m + 1}")
        h1 = first.subgraph(g)
        second = pipeline_cor36(h1, m)
    except (PipelineStall, NotTreeConnected, CapacityError) as exc:
        if hyp["hypothesis_ok"]:
            log.error("FALSIFICATION: bounded bipartite factor failed under its hypothesis: %s", exc)
        exc.hypothesis = hyp
        raise
    cert = FactorCertificate.build(
        g, second.edge_ids, m=m, meta={"theorem": "bounded_bipartite", "m": m, **hyp}
    )
    assert cert.bipartite and cert.max_degree <= 3 * m + 1
    return cert


def _complete_bipartite_part(g: MultiGraph, a: int) -> MultiGraph:
    """One edge per pair across the split {0..a-1} | {a..n-1} of a complete graph."""
    picked, seen = [], set()
    for eid, u, v in g.edges:
        key = (min(u, v), max(u, v))
        if (u < a) != (v < a) and key not in seen:
            seen.add(key)
            picked.append(eid)
    return g.spanning_subgraph(picked)


def _direct_complete(g: MultiGraph, allowed_for: Callable[[int], range], stage: str) -> tuple[frozenset, int]:
    """Search complete bipartite subgraphs from the balanced split outwards.

    Returns the edge set and the size of the smaller side used.
    """
    if not is_complete(g):
        raise PipelineStall(stage, "direct construction needs a complete graph")
    for a in range(g.n // 2, 0, -1):
        h = _complete_bipartite_part(g, a)
        found = degree_factor_search(h, [allowed_for(h.degree(v)) for v in h.vertices])
        if found is not None:
            return found, a
    raise PipelineStall(stage, "no factor in any complete bipartite subgraph")


def akfactor_pipeline(g: MultiGraph, k: int) -> FactorCertificate:
    """Bipartite connected factor with every degree in {k, 2k, 3k, 4k}.

    General route: bipartite (2k-1)-tree-connected factor of maximum degree
    6k - 2, made minimal, then a connected modulo-k factor rooted at a
    minimum-degree vertex u. Complete graphs of order below 8k - 4, and
    complete graphs on which the general route stalls, are handled by direct
    search inside a balanced complete bipartite subgraph.
    """
    if k < 1:
        raise GraphError("k must be a positive integer")
    if g.n < 3 * k:
        raise GraphError(f"order {g.n} is below 3k = {3 * k}")
    hyp = _hypothesis(g, 16 * k * k, 3 * k)
    meta = {"theorem": "akfactor", "k": k, **hyp}
    targets = {k, 2 * k, 3 * k, 4 * k}

    def direct(reason):
        found, a = _direct_complete(g, lambda d: [t for t in sorted(targets) if t <= d], "direct")
        cert = FactorCertificate.build(
            g, found, k=k, meta={**meta, "route": "direct", "reason": reason, "split": [a, g.n - a]}
        )
        assert cert.bipartite and cert.connected and set(cert.degrees) <= targets
        return cert

    if g.n < 8 * k - 4 and is_complete(g):
        return direct("order below 8k - 4")
    m = 2 * k - 1
    try:
        h = bipartite_bounded_tree_connected(g, m).subgraph(g)
        h = minimally_tree_connected(h, m)
        degrees = h.degrees()
        u = min(h.vertices, key=lambda v: (degrees[v], v))
        if degrees[u] > 2 * m:
            raise PipelineStall("minimal", f"minimum degree {degrees[u]} exceeds {2 * m}")
        found = modulo_factor_search(h, k, u, max_edges=None)
        if found is None:
            if hyp["hypothesis_ok"]:
                log.error("FALSIFICATION: no modulo-%d factor in a minimal bipartite %d-tree-connected graph", k, m)
            raise PipelineStall("modulo", "no connected modulo-k factor under the degree caps")
    except (PipelineStall, NotTreeConnected, CapacityError) as exc:
        if is_complete(g):
            return direct(f"general route stalled: {exc}")
        raise
    cert = FactorCertificate.build(g, found.edge_ids, k=k, meta={**meta, "route": "general", "u": u})
    assert cert.degrees[u] <= 4 * k
    assert all(0 < d <= 5 * k - 1 for v, d in enumerate(cert.degrees) if v != u)
    assert cert.bipartite and cert.connected and set(cert.degrees) <= targets
    return cert


def even_factor_pipeline(g: MultiGraph) -> FactorCertificate:
    """Bipartite connected factor with every degree in {2, 4, 6}.

    General route: bipartite 2-tree-connected factor of maximum degree 7,
    then a connected even-degree spanning subgraph of it. Complete graphs on
    which that route stalls are handled by direct search.
    """
    if g.n < 6:
        raise GraphError(f"order {g.n} is below 6")
    hyp = _hypothesis(g, 16, 6)
    meta = {"theorem": "even246", **hyp}
    try:
        h = bipartite_bounded_tree_connected(g, 2).subgraph(g)
        found = even_connected_factor(h, max_degree=6)
        if found is None:
            if hyp["hypothesis_ok"]:
                log.error("FALSIFICATION: 2-tree-connected bipartite factor has no even connected factor")
            raise PipelineStall("even", "no connected even factor")
        edges, route = found.edge_ids, "general"
    except (PipelineStall, NotTreeConnected, CapacityError) as exc:
        if not is_complete(g):
            raise
        edges, a = _direct_complete(g, lambda d: range(2, min(d, 6) + 1, 2), "direct")
        route = "direct"
        meta.update(reason=f"general route stalled: {exc}", split=[a, g.n - a])
    cert = FactorCertificate.build(g, edges, k=2, meta={**meta, "route": route})
    assert cert.bipartite and cert.connected and set(cert.degrees) <= {2, 4, 6}
    return cert
