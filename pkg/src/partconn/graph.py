"""Loopless multigraphs with stable edge ids, and the cut-counting primitives."""

from __future__ import annotations

from collections import Counter
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import GraphError

VertexSet = frozenset
Partition = tuple  # tuple[frozenset[int], ...]


class MultiGraph:
    """Immutable loopless multigraph on vertices ``0..n-1``.

    Every edge carries an integer id. Spanning subgraphs keep the ids of the
    parent, so a factor is just a subset of the parent's edge ids.
    """

    __slots__ = ("n", "_edges", "_ends", "_incident")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {n!r}")
        self.n = n
        ends = {}
        incident: list[list[int]] = [[] for _ in range(n)]
        ordered = []
        for eid, u, v in edges:
            if eid in ends:
                raise GraphError(f"duplicate edge id {eid}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {eid} has endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge {eid} is a loop at vertex {u}")
            ends[eid] = (u, v)
            incident[u].append(eid)
            incident[v].append(eid)
            ordered.append((eid, u, v))
        self._edges = tuple(ordered)
        self._ends = ends
        self._incident = tuple(tuple(x) for x in incident)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "MultiGraph":
        return cls(n, ((i, u, v) for i, (u, v) in enumerate(pairs)))

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        return self._edges

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e[0] for e in self._edges)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self._ends[eid]

    def has_edge(self, eid: int) -> bool:
        return eid in self._ends

    def incident(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self._incident)

    def max_degree(self) -> int:
        return max(self.degrees())

    def other_end(self, eid: int, v: int) -> int:
        a, b = self._ends[eid]
        return b if a == v else a

    def multiplicity(self) -> Counter:
        """Count of parallel edges per unordered vertex pair."""
        return Counter((min(u, v), max(u, v)) for _, u, v in self._edges)

    def spanning_subgraph(self, eids: Iterable[int]) -> "MultiGraph":
        keep = set(eids)
        missing = keep - self._ends.keys()
        if missing:
            raise GraphError(f"edge ids not in graph: {sorted(missing)}")
        return MultiGraph(self.n, (e for e in self._edges if e[0] in keep))

    def without_edges(self, eids: Iterable[int]) -> "MultiGraph":
        drop = set(eids)
        return MultiGraph(self.n, (e for e in self._edges if e[0] not in drop))

    def induced(self, keep: Iterable[int]) -> tuple["MultiGraph", tuple[int, ...]]:
        """Induced subgraph on ``keep``, relabelled densely.

        Returns the subgraph and the tuple mapping new labels to old ones.
        Edge ids are preserved.
        """
        labels = tuple(sorted(set(keep)))
        check_vertices(self, labels)
        if not labels:
            raise GraphError("induced subgraph on an empty vertex set")
        index = {v: i for i, v in enumerate(labels)}
        sub = [
            (eid, index[u], index[v])
            for eid, u, v in self._edges
            if u in index and v in index
        ]
        return MultiGraph(len(labels), sub), labels

    def is_spanning_subgraph_of(self, other: "MultiGraph") -> bool:
        if self.n != other.n:
            return False
        return all(
            other.has_edge(eid) and set(other.endpoints(eid)) == {u, v}
            for eid, u, v in self._edges
        )

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"MultiGraph(n={self.n}, edges={self.num_edges})"


def check_vertices(g: MultiGraph, x: Iterable[int]) -> frozenset:
    xs = frozenset(x)
    bad = [v for v in xs if not (isinstance(v, int) and 0 <= v < g.n)]
    if bad:
        raise GraphError(f"vertex index out of range 0..{g.n - 1}: {sorted(bad)}")
    return xs


def check_partition(p: Sequence[Iterable[int]], ground: Iterable[int]) -> Partition:
    """Validate ``p`` as a partition of ``ground``; empty parts are dropped."""
    ground = frozenset(ground)
    parts = []
    seen: set[int] = set()
    for part in p:
        part = frozenset(part)
        if not part:
            continue
        if part & seen:
            raise GraphError("partition parts overlap")
        seen |= part
        parts.append(part)
    if seen != ground:
        raise GraphError("partition does not cover the ground set exactly")
    return tuple(parts)


def cut_degree(g: MultiGraph, x: Iterable[int]) -> int:
    """Number of edges with exactly one end in ``x``."""
    xs = check_vertices(g, x)
    return sum((u in xs) != (v in xs) for _, u, v in g.edges)


def edges_inside(g: MultiGraph, x: Iterable[int]) -> int:
    """Number of edges with both ends in ``x``."""
    xs = check_vertices(g, x)
    return sum(u in xs and v in xs for _, u, v in g.edges)


def _labels(g: MultiGraph, parts: Partition) -> list[int]:
    label = [-1] * g.n
    for i, part in enumerate(parts):
        for v in part:
            label[v] = i
    return label


def crossing_edge_count(g: MultiGraph, p: Sequence[Iterable[int]]) -> int:
    """Number of edges joining different parts of the partition ``p`` of V(g)."""
    check_vertices(g, (v for part in p for v in part))
    parts = check_partition(p, g.vertices)
    label = _labels(g, parts)
    return sum(label[u] != label[v] for _, u, v in g.edges)


def induced_cpartite_factor(g: MultiGraph, parts: Sequence[Iterable[int]]) -> MultiGraph:
    """Spanning subgraph keeping exactly the edges between different parts."""
    check_vertices(g, (v for part in parts for v in part))
    label = _labels(g, check_partition(parts, g.vertices))
    return g.spanning_subgraph(eid for eid, u, v in g.edges if label[u] != label[v])


def connected_components(g: MultiGraph) -> Partition:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    parent = list(range(g.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for _, u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    return tuple(frozenset(vs) for _, vs in sorted(groups.items()))


def is_connected(g: MultiGraph) -> bool:
    return len(connected_components(g)) == 1


def is_bipartite(g: MultiGraph) -> Optional[Partition]:
    """A proper 2-colouring ``(class of vertex 0, other class)``, or ``None``."""
    color = [-1] * g.n
    for s in g.vertices:
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for eid in g.incident(v):
                w = g.other_end(eid, v)
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return (
        frozenset(v for v in g.vertices if color[v] == 0),
        frozenset(v for v in g.vertices if color[v] == 1),
    )


def is_complete(g: MultiGraph) -> bool:
    """True if every pair of distinct vertices is joined by at least one edge."""
    return len(g.multiplicity()) == g.n * (g.n - 1) // 2


# -- text edge-list format ---------------------------------------------------


def parse_edge_list(text: str) -> MultiGraph:
    """Parse ``p <n> <m>`` followed by ``m`` lines ``e <u> <v>``.

    Edge ids are assigned 0..m-1 in file order; ``#`` starts a comment.
    """
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if fields[0] == "p" and len(fields) == 3 and header is None:
                header = (int(fields[1]), int(fields[2]))
            elif fields[0] == "e" and len(fields) == 3 and header is not None:
                pairs.append((int(fields[1]), int(fields[2])))
            else:
                raise ValueError
        except ValueError:
            raise GraphError(f"line {lineno}: cannot parse {raw!r}") from None
    if header is None:
        raise GraphError("missing 'p <n> <m>' header")
    n, m = header
    if m != len(pairs):
        raise GraphError(f"header declares {m} edges, found {len(pairs)}")
    return MultiGraph.from_pairs(n, pairs)


def format_edge_list(g: MultiGraph) -> str:
    lines = [f"p {g.n} {g.num_edges}"]
    lines.extend(f"e {u} {v}" for _, u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def load_graph(path) -> MultiGraph:
    return parse_edge_list(Path(path).read_text())


def save_graph(g: MultiGraph, path) -> None:
    Path(path).write_text(format_edge_list(g))
