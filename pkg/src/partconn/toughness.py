"""Exact toughness by separator enumeration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

from .errors import CapacityError
from .graph import MultiGraph, is_complete

TOUGHNESS_MAX_N = 16

UNBOUNDED = math.inf


@dataclass(frozen=True)
class ToughnessReport:
    """``value`` is a Fraction, or ``UNBOUNDED`` when no vertex set disconnects the graph."""

    value: Union[Fraction, float]
    separator: Optional[frozenset] = None
    omega: Optional[int] = None

    @property
    def unbounded(self) -> bool:
        return self.value == UNBOUNDED

    def __str__(self):
        if self.unbounded:
            return "S = {}, omega = 1, t = unbounded"
        members = ", ".join(str(v) for v in sorted(self.separator))
        return f"S = {{{members}}}, omega = {self.omega}, t = {self.value.numerator}/{self.value.denominator}"

    def to_json(self) -> dict:
        if self.unbounded:
            return {"value": "unbounded"}
        return {
            "value": f"{self.value.numerator}/{self.value.denominator}",
            "separator": sorted(self.separator),
            "omega": self.omega,
        }


def _adjacency(g: MultiGraph) -> list[int]:
    adj = [0] * g.n
    for _, u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _omega(adj: list[int], alive: int) -> int:
    count = 0
    rest = alive
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & rest & ~comp
            comp |= new
            frontier |= new
        rest &= ~comp
        count += 1
    return count


def toughness(g: MultiGraph) -> ToughnessReport:
    """Minimum of |S| / omega(G - S) over S leaving at least two components.

    Separators are scanned by increasing size; a size s can only reach
    s / (n - s), so the scan stops once that exceeds the best ratio found.
    Parallel edges play no role.
    """
    if g.n > TOUGHNESS_MAX_N:
        raise CapacityError(f"toughness supports n <= {TOUGHNESS_MAX_N}, got {g.n}")
    if is_complete(g):
        return ToughnessReport(UNBOUNDED)
    adj = _adjacency(g)
    full = (1 << g.n) - 1
    best = None
    for size in range(0, g.n - 1):
        if best is not None and Fraction(size, g.n - size) >= best[0]:
            break
        for s in combinations(range(g.n), size):
            mask = sum(1 << v for v in s)
            omega = _omega(adj, full & ~mask)
            if omega >= 2:
                value = Fraction(size, omega)
                if best is None or value < best[0]:
                    best = (value, frozenset(s), omega)
    return ToughnessReport(*best)


def is_t_tough(g: MultiGraph, t) -> bool:
    return toughness(g).value >= Fraction(t)
