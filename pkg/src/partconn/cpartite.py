"""Edge-maximising c-partite induced factors.

A c-partite induced factor keeps exactly the edges running between classes of
a vertex colouring with at most ``c`` colours. A globally edge-maximum one
satisfies ``d_H(X) >= (c-1)/c * d_G(X)`` for every vertex set X, which is
certified here by comparing against the cyclically shifted colourings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .connectivity import is_partition_connected
from .errors import CapacityError, GraphError
from .graph import MultiGraph, check_vertices, cut_degree, induced_cpartite_factor
from .partitions import restricted_growth_strings
from .setfunc import SetFunction

EXHAUSTIVE_MAX_N = 12


@dataclass(frozen=True)
class CPartiteFactor:
    assignment: tuple[int, ...]  # class index per vertex, 0..c-1
    c: int
    factor: MultiGraph

    @property
    def parts(self) -> tuple[frozenset, ...]:
        """Nonempty classes, in class-index order."""
        classes = [frozenset(v for v, a in enumerate(self.assignment) if a == i) for i in range(self.c)]
        return tuple(p for p in classes if p)

    @property
    def crossing_count(self) -> int:
        return self.factor.num_edges

    def format(self) -> str:
        """Text form: ``c <v>:<class> ...`` then ``h <edge ids>``."""
        line1 = "c " + " ".join(f"{v}:{a}" for v, a in enumerate(self.assignment))
        line2 = "h " + " ".join(str(e) for e in sorted(self.factor.edge_ids))
        return f"{line1}\n{line2.rstrip()}\n"


def factor_from_assignment(g: MultiGraph, assignment, c: int) -> CPartiteFactor:
    assignment = tuple(assignment)
    if len(assignment) != g.n or any(not 0 <= a < c for a in assignment):
        raise GraphError("assignment must give every vertex a class in 0..c-1")
    parts = [[v for v in g.vertices if assignment[v] == i] for i in range(c)]
    return CPartiteFactor(assignment, c, induced_cpartite_factor(g, parts))


def _crossing(pairs, assignment) -> int:
    return sum(assignment[u] != assignment[v] for u, v in pairs)


def _check_c(c: int) -> None:
    if not isinstance(c, int) or c < 2:
        raise GraphError(f"c must be an integer >= 2, got {c!r}")


def _neighbour_counts(g: MultiGraph, v: int, assignment, c: int) -> list[int]:
    counts = [0] * c
    for eid in g.incident(v):
        counts[assignment[g.other_end(eid, v)]] += 1
    return counts


def local_search_cpartite(g: MultiGraph, c: int, seed: int = 0, restarts: int = 1) -> CPartiteFactor:
    """Single-vertex-move local optimum for the c-partite edge count.

    Starts from a seeded random colouring and sweeps vertices by index,
    moving a vertex to the class holding fewest of its neighbours whenever that
    strictly beats its current class. With several restarts the best local
    optimum is returned (earliest on ties).
    """
    _check_c(c)
    rng = random.Random(seed)
    best = None
    for _ in range(max(1, restarts)):
        assignment = [rng.randrange(c) for _ in g.vertices]
        improved = True
        while improved:
            improved = False
            for v in g.vertices:
                counts = _neighbour_counts(g, v, assignment, c)
                here = assignment[v]
                target = min(range(c), key=lambda j: (counts[j], j))
                if counts[target] < counts[here]:
                    assignment[v] = target
                    improved = True
        result = factor_from_assignment(g, assignment, c)
        if best is None or result.crossing_count > best.crossing_count:
            best = result
    return best


def exhaustive_max_cpartite(g: MultiGraph, c: int) -> CPartiteFactor:
    """Globally edge-maximum c-partite induced factor (n <= 12).

    Colourings are enumerated up to relabelling of classes as restricted
    growth strings with at most ``c`` labels; the first maximum wins.
    """
    _check_c(c)
    if g.n > EXHAUSTIVE_MAX_N:
        raise CapacityError(f"exhaustive c-partite search supports n <= {EXHAUSTIVE_MAX_N}, got {g.n}")
    pairs = [(u, v) for _, u, v in g.edges]
    best, best_rgs = -1, None
    for rgs in restricted_growth_strings(g.n, c):
        value = _crossing(pairs, rgs)
        if value > best:
            best, best_rgs = value, rgs
            if best == len(pairs):
                break
    return factor_from_assignment(g, best_rgs, c)


def is_local_optimum(g: MultiGraph, f: CPartiteFactor) -> bool:
    for v in g.vertices:
        counts = _neighbour_counts(g, v, f.assignment, f.c)
        if min(counts) < counts[f.assignment[v]]:
            return False
    return True


def shifted_assignment(assignment, c: int, x: frozenset, i: int) -> tuple[int, ...]:
    """Colouring whose class j is (V_j - X) plus (X intersected with V_{j+i mod c})."""
    return tuple((a - i) % c if v in x else a for v, a in enumerate(assignment))


@dataclass(frozen=True)
class ShiftCertificate:
    shift_ok: bool  # |E(H)| >= |E(H_i)| for every shift i
    degree_ok: bool  # c * d_H(X) >= (c - 1) * d_G(X)
    shifted_counts: tuple[int, ...]
    cut_h: int
    cut_g: int

    def __bool__(self):
        return self.shift_ok and self.degree_ok


def cyclic_shift_certify(g: MultiGraph, f: CPartiteFactor, x: Iterable[int]) -> ShiftCertificate:
    """Compare ``f`` with its c - 1 cyclic shifts on ``x`` and test the cut bound.

    Shifting only moves vertices of ``x``, so ``|E(H)| - |E(H_i)|`` equals
    ``d_H(x) - d_{H_i}(x)``; summing over all shifts gives the degree bound
    whenever ``f`` beats every shift.
    """
    xs = check_vertices(g, x)
    pairs = [(u, v) for _, u, v in g.edges]
    base = _crossing(pairs, f.assignment)
    shifted = tuple(
        _crossing(pairs, shifted_assignment(f.assignment, f.c, xs, i)) for i in range(1, f.c)
    )
    cut_h = cut_degree(f.factor, xs)
    cut_g = cut_degree(g, xs)
    return ShiftCertificate(
        shift_ok=all(base >= s for s in shifted),
        degree_ok=f.c * cut_h >= (f.c - 1) * cut_g,
        shifted_counts=shifted,
        cut_h=cut_h,
        cut_g=cut_g,
    )


def certify_partition_connectivity(g: MultiGraph, f: CPartiteFactor, l: SetFunction) -> bool:
    if not f.factor.is_spanning_subgraph_of(g):
        raise GraphError("factor is not a spanning subgraph of g")
    return is_partition_connected(f.factor, l)
