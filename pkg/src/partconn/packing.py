"""Edge-disjoint spanning tree packing by matroid union.

Edges are inserted one at a time into ``m`` forests. When an edge cannot be
placed directly, a breadth-first search over exchange sequences (put ``x``
into forest ``i``, evict an edge of the cycle it closes, re-home that edge,
...) finds a shortest augmenting path, which is always a valid exchange.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from .errors import GraphError, NotTreeConnected
from .graph import MultiGraph, connected_components, crossing_edge_count


class ForestPacking:
    """``m`` edge-disjoint forests of ``g`` with maximum total size."""

    def __init__(self, g: MultiGraph, m: int = 0):
        self.g = g
        self.owner: dict[int, int] = {}
        # adjacency per forest: vertex -> {eid: neighbour}
        self._adj: list[list[dict[int, int]]] = [[{} for _ in range(g.n)] for _ in range(m)]
        for eid in g.edge_ids:
            self.insert(eid)

    @property
    def m(self) -> int:
        return len(self._adj)

    def add_forest(self) -> None:
        self._adj.append([{} for _ in range(self.g.n)])
        for eid in self.unassigned():
            self.insert(eid)

    def unassigned(self) -> list[int]:
        return [eid for eid in self.g.edge_ids if eid not in self.owner]

    def size(self) -> int:
        return len(self.owner)

    def forests(self) -> list[frozenset]:
        out: list[set] = [set() for _ in range(self.m)]
        for eid, i in self.owner.items():
            out[i].add(eid)
        return [frozenset(f) for f in out]

    def is_full(self) -> bool:
        return self.size() == self.m * (self.g.n - 1)

    def _path(self, i: int, a: int, b: int) -> Optional[list[int]]:
        """Edge ids of the a-b path in forest ``i``, or None if a, b are not joined."""
        adj = self._adj[i]
        back = {a: None}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            if v == b:
                path = []
                while back[v] is not None:
                    eid, prev = back[v]
                    path.append(eid)
                    v = prev
                return path
            for eid, w in adj[v].items():
                if w not in back:
                    back[w] = (eid, v)
                    queue.append(w)
        return None

    def _place(self, eid: int, i: int) -> None:
        u, v = self.g.endpoints(eid)
        self._adj[i][u][eid] = v
        self._adj[i][v][eid] = u
        self.owner[eid] = i

    def _unplace(self, eid: int) -> None:
        i = self.owner.pop(eid)
        u, v = self.g.endpoints(eid)
        del self._adj[i][u][eid]
        del self._adj[i][v][eid]

    def _search(self, sources: list[int]):
        """BFS over exchange sequences.

        Returns ``(element, forest, label)`` for the first element that fits a
        forest freely, or ``(None, None, label)`` when no augmenting path exists.
        """
        label: dict[int, Optional[int]] = {s: None for s in sources}
        queue = deque(sources)
        while queue:
            x = queue.popleft()
            a, b = self.g.endpoints(x)
            for i in range(self.m):
                if self.owner.get(x) == i:
                    continue
                path = self._path(i, a, b)
                if path is None:
                    return x, i, label
                for y in path:
                    if y not in label:
                        label[y] = x
                        queue.append(y)
        return None, None, label

    def insert(self, eid: int) -> bool:
        if eid in self.owner or self.m == 0:
            return eid in self.owner
        x, i, label = self._search([eid])
        if x is None:
            return False
        while True:
            j = self.owner.get(x)
            if j is not None:
                self._unplace(x)
            self._place(x, i)
            parent = label[x]
            if parent is None:
                return True
            x, i = parent, j

    def deficiency_partition(self) -> tuple:
        """Vertex partition P minimising e(P) + m * (n - |P|).

        Built from every edge reachable by exchange sequences from the edges
        left out of the packing; each such edge is spanned by every forest
        restricted to that set, which makes the bound tight.
        """
        _, _, label = self._search(self.unassigned())
        reach = self.g.spanning_subgraph(label)
        return connected_components(reach)


def _trivially_connected(g: MultiGraph, m: int) -> bool:
    return g.n == 1 or m == 0


def is_tree_connected(g: MultiGraph, m: int) -> bool:
    """True if ``g`` has ``m`` edge-disjoint spanning trees."""
    if _trivially_connected(g, m):
        return True
    if g.num_edges < m * (g.n - 1) or min(g.degrees()) < m:
        return False
    return ForestPacking(g, m).is_full()


def tree_packing_number(g: MultiGraph) -> int:
    """Maximum number of edge-disjoint spanning trees of ``g``.

    Single-vertex graphs contain arbitrarily many (empty) spanning trees and
    are rejected here; use :func:`is_tree_connected` for them.
    """
    if g.n == 1:
        raise GraphError("a single-vertex graph has unbounded tree packing number")
    packing = ForestPacking(g, 1)
    m = 0
    while packing.is_full():
        m += 1
        if g.num_edges < (m + 1) * (g.n - 1):
            break
        packing.add_forest()
    return m


def extract_spanning_trees(g: MultiGraph, m: int) -> list[frozenset]:
    """``m`` pairwise edge-disjoint spanning trees, each a set of edge ids."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if _trivially_connected(g, m):
        return [frozenset() for _ in range(m)]
    packing = ForestPacking(g, m)
    if not packing.is_full():
        parts = packing.deficiency_partition()
        crossing = crossing_edge_count(g, parts)
        assert crossing < m * (len(parts) - 1)
        raise NotTreeConnected(m, parts, crossing)
    return packing.forests()


def minimally_tree_connected(g: MultiGraph, m: int) -> MultiGraph:
    """An m-tree-connected spanning subgraph from which no edge can be deleted.

    Edges are scanned by decreasing degree sum of their ends (ties by id) and
    dropped whenever the rest still packs ``m`` trees. The result has exactly
    ``m * (n - 1)`` edges, so some vertex has degree at most ``2m - 1``.
    """
    extract_spanning_trees(g, m)
    deg = g.degrees()
    order = sorted(g.edges, key=lambda e: (-(deg[e[1]] + deg[e[2]]), e[0]))
    target = m * (g.n - 1)
    current = g
    for eid, _, _ in order:
        if current.num_edges == target:
            break
        trial = current.without_edges([eid])
        if is_tree_connected(trial, m):
            current = trial
    assert current.num_edges == target
    assert g.n == 1 or min(current.degrees()) <= 2 * m
    return current
