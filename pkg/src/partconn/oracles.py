"""Brute-force reference computations for small graphs.

These share nothing with the fast paths beyond the graph container and are
used to cross-check them.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .errors import CapacityError
from .graph import MultiGraph
from .partitions import restricted_growth_strings
from .setfunc import Number, SetFunction

ORACLE_MAX_N = 10


def _guard(n: int, limit: int = ORACLE_MAX_N) -> None:
    if n > limit:
        raise CapacityError(f"brute force supports n <= {limit}, got {n}")


def nash_williams_number(g: MultiGraph) -> Optional[int]:
    """min over partitions P with |P| >= 2 of floor(e(P) / (|P| - 1)); None if n == 1."""
    _guard(g.n)
    best = None
    pairs = [(u, v) for _, u, v in g.edges]
    for rgs in restricted_growth_strings(g.n):
        parts = max(rgs) + 1
        if parts < 2:
            continue
        crossing = sum(rgs[u] != rgs[v] for u, v in pairs)
        value = crossing // (parts - 1)
        if best is None or value < best:
            best = value
    return best


def _restricted(g: MultiGraph, remove: Iterable[int]):
    removed = set(remove)
    keep = [v for v in range(g.n) if v not in removed]
    pairs = [(keep.index(u), keep.index(v)) for _, u, v in g.edges if u not in removed and v not in removed]
    return keep, pairs


def theta_by_enumeration(g: MultiGraph, l: SetFunction, remove: Iterable[int] = ()) -> Number:
    """max over partitions P of V(g) - remove of sum_{A in P} l(A) - e(P).

    For intersecting supermodular ``l`` the component partition attains this
    maximum (refining a part never helps, merging components never hurts).
    """
    keep, pairs = _restricted(g, remove)
    _guard(len(keep))
    if not keep:
        return 0
    best = None
    for rgs in restricted_growth_strings(len(keep)):
        blocks = [0] * (max(rgs) + 1)
        for i, b in enumerate(rgs):
            blocks[b] |= 1 << keep[i]
        value = Fraction(sum(l.value(b) for b in blocks)) - sum(rgs[u] != rgs[v] for u, v in pairs)
        if best is None or value > best:
            best = value
    return best.numerator if best.denominator == 1 else best


def is_partition_connected_by_enumeration(g: MultiGraph, l: SetFunction) -> bool:
    _guard(g.n)
    full = (1 << g.n) - 1
    return theta_by_enumeration(g, l) <= l.value(full)


def brute_components(g: MultiGraph, l: SetFunction) -> tuple:
    """Coarsest partition maximising sum l(A) - e(P), by enumeration."""
    _guard(g.n)
    pairs = [(u, v) for _, u, v in g.edges]
    best = None
    best_parts = None
    for rgs in restricted_growth_strings(g.n):
        k = max(rgs) + 1
        blocks = [0] * k
        for v, b in enumerate(rgs):
            blocks[b] |= 1 << v
        value = Fraction(sum(l.value(b) for b in blocks)) - sum(rgs[u] != rgs[v] for u, v in pairs)
        if best is None or value > best or (value == best and k < len(best_parts)):
            best, best_parts = value, blocks
    parts = [frozenset(v for v in range(g.n) if b >> v & 1) for b in best_parts]
    return tuple(sorted(parts, key=min))


def components_count(n: int, pairs: list[tuple[int, int]], alive: int) -> int:
    """Number of connected components among vertices in the bitmask ``alive``."""
    seen = 0
    count = 0
    adj = [0] * n
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    for s in range(n):
        if not alive >> s & 1 or seen >> s & 1:
            continue
        count += 1
        frontier = 1 << s
        seen |= frontier
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & alive & ~seen
            seen |= new
            frontier |= new
    return count


def toughness_by_enumeration(g: MultiGraph):
    """(value, S) minimising |S| / omega(G - S) over all S with omega >= 2, no pruning.

    Returns ``(None, None)`` when no vertex set disconnects the graph.
    """
    _guard(g.n, 12)
    pairs = [(u, v) for _, u, v in g.edges]
    full = (1 << g.n) - 1
    best = None
    best_s = None
    for s in range(1 << g.n):
        omega = components_count(g.n, pairs, full & ~s)
        if omega >= 2:
            value = Fraction(bin(s).count("1"), omega)
            if best is None or value < best:
                best, best_s = value, s
    if best is None:
        return None, None
    return best, frozenset(v for v in range(g.n) if best_s >> v & 1)


def all_factors(g: MultiGraph, required: Iterable[int] = ()):
    """Every spanning subgraph containing ``required``, as frozensets of edge ids."""
    required = frozenset(required)
    free = [e for e in g.edge_ids if e not in required]
    for r in range(len(free) + 1):
        for chosen in combinations(free, r):
            yield required | frozenset(chosen)
