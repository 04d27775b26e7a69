"""l-partition-connectivity, its components, and the deficiency Theta_l."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .errors import CapacityError
from .graph import MultiGraph, check_vertices, connected_components
from .packing import ForestPacking, is_tree_connected
from .partitions import restricted_growth_strings
from .setfunc import Number, SetFunction

ENUM_MAX_N = 12
UNIFORM_MAX_N = 16


def _mask(labels: Iterable[int]) -> int:
    mask = 0
    for v in labels:
        mask |= 1 << v
    return mask


def _pc_by_enumeration(h: MultiGraph, l: SetFunction, labels: tuple[int, ...]) -> bool:
    """Check e(P) >= sum l(A) - l(V) over every partition P of V(h)."""
    if h.n > ENUM_MAX_N:
        raise CapacityError(f"partition enumeration supports n <= {ENUM_MAX_N}, got {h.n}")
    top = l.value(_mask(labels))
    pairs = [(u, v) for _, u, v in h.edges]
    bits = [1 << v for v in labels]
    for rgs in restricted_growth_strings(h.n):
        blocks = [0] * (max(rgs) + 1)
        for v, b in enumerate(rgs):
            blocks[b] |= bits[v]
        crossing = sum(rgs[u] != rgs[v] for u, v in pairs)
        if crossing < sum(l.value(b) for b in blocks) - top:
            return False
    return True


def _pc(h: MultiGraph, l: SetFunction, labels: tuple[int, ...]) -> bool:
    if h.n == 1:
        return True
    if l.is_integral_uniform:
        return is_tree_connected(h, max(l.constant, 0))
    return _pc_by_enumeration(h, l, labels)


def is_partition_connected(g: MultiGraph, l: SetFunction) -> bool:
    """True if every partition P of V(g) has e(P) >= sum_{A in P} l(A) - l(V).

    Integer uniform functions reduce to tree packing and work at any size;
    anything else enumerates all partitions (n <= 12).
    """
    return _pc(g, l, tuple(g.vertices))


def _merge_uniform(h: MultiGraph, m: int, parts: list[frozenset]) -> list[frozenset]:
    """Merge m-tree-connected parts to the coarsest partition.

    Every part is m-tree-connected, so a union of parts is m-tree-connected
    exactly when the quotient multigraph on those parts is.
    """
    while True:
        p = len(parts)
        where = [0] * h.n
        for i, part in enumerate(parts):
            for v in part:
                where[v] = i
        between = [[0] * p for _ in range(p)]
        for _, u, v in h.edges:
            a, b = where[u], where[v]
            if a != b:
                between[a][b] += 1
                between[b][a] += 1
        merged = None
        for size in range(2, p + 1):
            for group in combinations(range(p), size):
                inner = sum(between[a][b] for a, b in combinations(group, 2))
                if inner < m * (size - 1):
                    continue
                index = {a: i for i, a in enumerate(group)}
                quotient = MultiGraph.from_pairs(
                    size,
                    (
                        (index[a], index[b])
                        for a, b in combinations(group, 2)
                        for _ in range(between[a][b])
                    ),
                )
                if is_tree_connected(quotient, m):
                    merged = group
                    break
            if merged:
                break
        if merged is None:
            return parts
        union = frozenset().union(*(parts[i] for i in merged))
        parts = [part for i, part in enumerate(parts) if i not in merged] + [union]


def _merge_general(h: MultiGraph, l: SetFunction, labels, parts: list[frozenset]) -> list[frozenset]:
    while True:
        merged = None
        for size in range(2, len(parts) + 1):
            for group in combinations(range(len(parts)), size):
                union = frozenset().union(*(parts[i] for i in group))
                sub, sub_labels = h.induced(union)
                if _pc_by_enumeration(sub, l, tuple(labels[v] for v in sub_labels)):
                    merged = group
                    break
            if merged:
                break
        if merged is None:
            return parts
        union = frozenset().union(*(parts[i] for i in merged))
        parts = [part for i, part in enumerate(parts) if i not in merged] + [union]


def _components(h: MultiGraph, l: SetFunction, labels: tuple[int, ...]) -> list[frozenset]:
    if l.is_integral_uniform:
        if h.n > UNIFORM_MAX_N:
            raise CapacityError(f"component search supports n <= {UNIFORM_MAX_N}, got {h.n}")
        m = l.constant
        if m <= 0:
            return [frozenset(h.vertices)]
        if m == 1:
            return list(connected_components(h))
        packing = ForestPacking(h, m)
        if packing.is_full():
            return [frozenset(h.vertices)]
        # parts of a partition maximising m|P| - e(P) are m-tree-connected
        start = list(packing.deficiency_partition())
        return _merge_uniform(h, m, start)
    if h.n > ENUM_MAX_N:
        raise CapacityError(f"component search supports n <= {ENUM_MAX_N}, got {h.n}")
    return _merge_general(h, l, labels, [frozenset([v]) for v in h.vertices])


def _canonical(parts: Iterable[frozenset]) -> tuple:
    return tuple(sorted(parts, key=min))


def partition_connected_components(g: MultiGraph, l: SetFunction) -> tuple:
    """The coarsest partition of V(g) into sets inducing l-partition-connected subgraphs.

    Parts are ordered by smallest vertex. ``l`` must be intersecting
    supermodular for the partition to be well defined.
    """
    return _canonical(_components(g, l, tuple(g.vertices)))


def theta(g: MultiGraph, l: SetFunction, remove: Optional[Iterable[int]] = None) -> Number:
    """Theta_l of ``g`` minus the vertex set ``remove``.

    Evaluates sum_{A in P} l(A) - e(P) at the component partition P of the
    remaining graph. ``l`` keeps seeing original vertex labels, and an empty
    remainder gives 0.
    """
    removed = check_vertices(g, remove or ())
    keep = [v for v in g.vertices if v not in removed]
    if not keep:
        return 0
    h, labels = g.induced(keep)
    parts = _components(h, l, labels)
    where = [0] * h.n
    for i, part in enumerate(parts):
        for v in part:
            where[v] = i
    crossing = sum(where[u] != where[v] for _, u, v in h.edges)
    total = sum(l.value(_mask(labels[v] for v in part)) for part in parts)
    value = Fraction(total) - crossing
    return value.numerator if value.denominator == 1 else value
