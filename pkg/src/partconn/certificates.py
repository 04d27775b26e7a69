"""Factor certificates and the validators that re-check them from the edge set."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import MultiGraph, is_bipartite, is_connected
from .packing import extract_spanning_trees


def spanning_tree_problems(g: MultiGraph, trees: Iterable[Iterable[int]]) -> list[str]:
    """Empty list iff the trees are pairwise edge-disjoint spanning trees of ``g``."""
    problems = []
    used: set[int] = set()
    for t, tree in enumerate(trees):
        tree = set(tree)
        if tree & used:
            problems.append(f"tree {t} shares edges with an earlier tree")
        used |= tree
        if len(tree) != g.n - 1:
            problems.append(f"tree {t} has {len(tree)} edges, expected {g.n - 1}")
        parent = list(range(g.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for eid in tree:
            if not g.has_edge(eid):
                problems.append(f"tree {t} uses unknown edge {eid}")
                break
            ru, rv = map(find, g.endpoints(eid))
            if ru == rv:
                problems.append(f"tree {t} contains a cycle")
                break
            parent[ru] = rv
        else:
            if len({find(v) for v in g.vertices}) != 1:
                problems.append(f"tree {t} does not span")
    return problems


@dataclass(frozen=True)
class FactorCertificate:
    """A factor of a parent graph plus flags that can be re-derived from its edges."""

    n: int
    edge_ids: frozenset
    degrees: tuple[int, ...]
    connected: bool
    bipartite: bool
    packing: Optional[tuple[frozenset, ...]] = None
    mod_k: Optional[int] = None
    meta: dict = field(default_factory=dict, compare=False)

    @classmethod
    def build(
        cls,
        parent: MultiGraph,
        edge_ids: Iterable[int],
        m: Optional[int] = None,
        k: Optional[int] = None,
        meta: Optional[dict] = None,
    ) -> "FactorCertificate":
        h = parent.spanning_subgraph(edge_ids)
        packing = None if m is None else tuple(extract_spanning_trees(h, m))
        return cls(
            n=parent.n,
            edge_ids=frozenset(h.edge_ids),
            degrees=h.degrees(),
            connected=is_connected(h),
            bipartite=is_bipartite(h) is not None,
            packing=packing,
            mod_k=k,
            meta=dict(meta or {}),
        )

    def subgraph(self, parent: MultiGraph) -> MultiGraph:
        return parent.spanning_subgraph(self.edge_ids)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def problems(self, parent: MultiGraph) -> list[str]:
        """Re-verify every claimed flag against ``parent``; empty list means valid."""
        out = []
        if parent.n != self.n:
            return ["vertex count differs from parent"]
        missing = [e for e in self.edge_ids if not parent.has_edge(e)]
        if missing:
            return [f"edge ids not in parent: {sorted(missing)}"]
        h = parent.spanning_subgraph(self.edge_ids)
        if h.degrees() != tuple(self.degrees):
            out.append("degree table does not match edge set")
        if is_connected(h) != self.connected:
            out.append("connectivity flag is wrong")
        if (is_bipartite(h) is not None) != self.bipartite:
            out.append("bipartite flag is wrong")
        if self.packing is not None:
            if any(not set(t) <= self.edge_ids for t in self.packing):
                out.append("packing uses edges outside the factor")
            out.extend(spanning_tree_problems(h, self.packing))
        if self.mod_k is not None:
            bad = [v for v, d in enumerate(h.degrees()) if d <= 0 or d % self.mod_k]
            if bad:
                out.append(f"degrees not positive multiples of {self.mod_k} at {bad}")
        return out

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "edge_ids": sorted(self.edge_ids),
            "degrees": list(self.degrees),
            "connected": self.connected,
            "bipartite": self.bipartite,
        }
        if self.packing is not None:
            out["packing"] = [sorted(t) for t in self.packing]
        if self.mod_k is not None:
            out["mod_k"] = self.mod_k
        if self.meta:
            out["meta"] = self.meta
        return out
