"""Degree-capped tree-connected factors and the deficiency inequalities behind them."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .certificates import FactorCertificate
from .connectivity import is_partition_connected, theta
from .cpartite import EXHAUSTIVE_MAX_N as CPARTITE_MAX_N
from .cpartite import exhaustive_max_cpartite, local_search_cpartite
from .errors import CapacityError, GraphError, PipelineStall
from .graph import MultiGraph, check_vertices, edges_inside
from .packing import extract_spanning_trees, is_tree_connected
from .setfunc import SetFunction, set_function_properties

log = logging.getLogger(__name__)

SUBSET_MAX_N = 10
SEARCH_EXHAUSTIVE_MAX_N = 10


@dataclass(frozen=True)
class DegreeCapProfile:
    caps: tuple[int, ...]
    u: Optional[int] = None

    def __post_init__(self):
        if any(c < 0 for c in self.caps):
            raise GraphError("degree caps must be nonnegative")
        if self.u is not None and not 0 <= self.u < len(self.caps):
            raise GraphError(f"distinguished vertex {self.u} out of range")

    @classmethod
    def uniform(cls, n: int, cap: int) -> "DegreeCapProfile":
        return cls(tuple([cap] * n))

    @classmethod
    def from_bounds(cls, bounds: Sequence[Fraction], u: Optional[int] = None) -> "DegreeCapProfile":
        """Ceiling of each rational bound, floor at ``u``."""
        caps = [math.ceil(Fraction(b)) for b in bounds]
        if u is not None:
            caps[u] = math.floor(Fraction(bounds[u]))
        return cls(tuple(caps), u)

    def allows(self, degrees: Sequence[int]) -> bool:
        return all(d <= c for d, c in zip(degrees, self.caps))


@dataclass(frozen=True)
class HypothesisParams:
    lam: Fraction
    eta: tuple
    required: Optional[MultiGraph] = None

    def __post_init__(self):
        if not 0 <= self.lam <= 1:
            raise GraphError("lambda must lie in [0, 1]")


@dataclass(frozen=True)
class InequalityCheck:
    preconditions_ok: bool
    verdict: bool
    lhs: Fraction = None
    rhs: Fraction = None
    detail: str = ""
    witness: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        out = {"preconditions_ok": self.preconditions_ok, "verdict": self.verdict}
        if self.lhs is not None:
            out["lhs"] = str(self.lhs)
            out["rhs"] = str(self.rhs)
        if self.detail:
            out["detail"] = self.detail
        if self.witness:
            out["witness"] = self.witness
        return out


def _subsets_guard(n: int) -> None:
    if n > SUBSET_MAX_N:
        raise CapacityError(f"subset enumeration supports n <= {SUBSET_MAX_N}, got {n}")


def _cut_table(g: MultiGraph) -> list[int]:
    """d_g(X) for every bitmask X."""
    pairs = [(1 << u, 1 << v) for _, u, v in g.edges]
    return [sum(bool(X & a) != bool(X & b) for a, b in pairs) for X in range(1 << g.n)]


def min_cut_ratio(g: MultiGraph, g0: MultiGraph) -> Optional[Fraction]:
    """min over X with d_g(X) > 0 of d_{g0}(X) / d_g(X); None if g has no cut edge."""
    _subsets_guard(g.n)
    cg, c0 = _cut_table(g), _cut_table(g0)
    ratios = [Fraction(a, b) for a, b in zip(c0, cg) if b]
    return min(ratios) if ratios else None


def cut_condition_holds(g: MultiGraph, g0: MultiGraph, eps: Fraction) -> bool:
    """d_{g0}(X) >= eps * d_g(X) for every vertex set X."""
    _subsets_guard(g.n)
    eps = Fraction(eps)
    return all(a >= eps * b for a, b in zip(_cut_table(g0), _cut_table(g)))


def _spanning_check(g: MultiGraph, g0: MultiGraph) -> None:
    if not g0.is_spanning_subgraph_of(g):
        raise GraphError("g0 must be a spanning subgraph of g (shared edge ids)")


def _as_fraction(x) -> Fraction:
    return Fraction(x)


def _cut_bound_preconditions(g, g0, l, eps) -> list[str]:
    reasons = []
    if not is_partition_connected(g, l.scaled(1 / eps)):
        reasons.append("g is not l/eps-partition-connected")
    if not cut_condition_holds(g, g0, eps):
        reasons.append("some cut of g0 is below eps times the cut of g")
    return reasons


def _cut_bound_sides(g, g0, l, eps, s) -> tuple[Fraction, Fraction]:
    lhs = _as_fraction(theta(g0, l, s))
    rhs = (
        sum(Fraction(g0.degree(v), 2) + eps * g.degree(v) / 2 - l({v}) for v in s)
        + l(range(g.n))
        - edges_inside(g0, s)
    )
    return lhs, _as_fraction(rhs)


def _cut_bound_args(g, g0, eps):
    _spanning_check(g, g0)
    eps = Fraction(eps)
    if eps <= 0:
        raise GraphError("eps must be positive")
    return eps


def verify_lemma32(g: MultiGraph, g0: MultiGraph, l: SetFunction, eps, s: Iterable[int]) -> InequalityCheck:
    """Theta bound for a spanning subgraph that keeps an eps share of every cut.

    Checks  Theta_l(g0 - S) <= sum_{v in S} (d_g0(v)/2 + eps d_g(v)/2 - l(v)) + l(V) - e_g0(S)
    where e_g0(S) counts edges inside S. The preconditions (g is l/eps-partition-
    connected, every cut of g0 is at least eps times the cut of g) are
    reported separately from the verdict.
    """
    eps = _cut_bound_args(g, g0, eps)
    s = check_vertices(g, s)
    reasons = _cut_bound_preconditions(g, g0, l, eps)
    lhs, rhs = _cut_bound_sides(g, g0, l, eps, s)
    return InequalityCheck(not reasons, lhs <= rhs, lhs, rhs, "; ".join(reasons))


def verify_lemma32_all(g: MultiGraph, g0: MultiGraph, l: SetFunction, eps) -> InequalityCheck:
    """:func:`verify_lemma32` over every S, with preconditions checked once.

    The witness lists the violating sets as bitmasks.
    """
    eps = _cut_bound_args(g, g0, eps)
    _subsets_guard(g.n)
    reasons = _cut_bound_preconditions(g, g0, l, eps)
    bad = []
    for mask in range(1 << g.n):
        lhs, rhs = _cut_bound_sides(g, g0, l, eps, [v for v in g.vertices if mask >> v & 1])
        if not lhs <= rhs:
            bad.append(mask)
    return InequalityCheck(not reasons, not bad, detail="; ".join(reasons), witness={"violations": bad} if bad else {})


def _scaled_bound_args(g, g0, k):
    _spanning_check(g, g0)
    k = Fraction(k)
    if k < 1:
        raise GraphError("k must be at least 1")
    return k


def _scaled_bound_preconditions(g, g0, l, k) -> list[str]:
    reasons = []
    if not cut_condition_holds(g, g0, 1 / k):
        reasons.append("some cut of g0 is below 1/k times the cut of g")
    if not l.is_uniform and not set_function_properties(l, g.n).intersecting_supermodular:
        reasons.append("l is not intersecting supermodular")
    return reasons


def _scaled_bound_sides(g, g0, l, k, s) -> tuple[Fraction, Fraction]:
    lhs = _as_fraction(theta(g0, l, s))
    rhs = (
        theta(g, l.scaled(k), s) / k
        + sum(Fraction(g0.degree(v), 2) - Fraction(g.degree(v)) / (2 * k) for v in s)
        - edges_inside(g0, s)
        + edges_inside(g, s) / k
    )
    return lhs, _as_fraction(rhs)


def verify_thm37(g: MultiGraph, g0: MultiGraph, l: SetFunction, k, s: Iterable[int]) -> InequalityCheck:
    """Compare Theta_l(g0 - S) with the scaled deficiency of g - S.

    Checks  Theta_l(g0 - S) <= Theta_{kl}(g - S)/k + sum_{v in S}(d_g0(v)/2 - d_g(v)/(2k))
    - e_g0(S) + e_g(S)/k, given d_g0(A) >= d_g(A)/k for all A.
    """
    k = _scaled_bound_args(g, g0, k)
    s = check_vertices(g, s)
    reasons = _scaled_bound_preconditions(g, g0, l, k)
    lhs, rhs = _scaled_bound_sides(g, g0, l, k, s)
    return InequalityCheck(not reasons, lhs <= rhs, lhs, rhs, "; ".join(reasons))


def verify_thm37_all(g: MultiGraph, g0: MultiGraph, l: SetFunction, k) -> InequalityCheck:
    k = _scaled_bound_args(g, g0, k)
    _subsets_guard(g.n)
    reasons = _scaled_bound_preconditions(g, g0, l, k)
    bad = []
    for mask in range(1 << g.n):
        lhs, rhs = _scaled_bound_sides(g, g0, l, k, [v for v in g.vertices if mask >> v & 1])
        if not lhs <= rhs:
            bad.append(mask)
    return InequalityCheck(not reasons, not bad, detail="; ".join(reasons), witness={"violations": bad} if bad else {})


def verify_sufficient_hypothesis(
    g0: MultiGraph,
    l: SetFunction,
    hp: HypothesisParams,
    supergraph: Optional[MultiGraph] = None,
) -> InequalityCheck:
    """Check, for every S, the strict deficiency bound that guarantees a capped factor.

    Theta_l(g0 - S) < 1 + sum_{v in S}(eta(v) - 2 l(v)) + l(V) + l(S) - lam (e(S) + l(S)).
    ``e(S)`` counts edges inside S in ``g0``, or in ``supergraph`` when given.
    The first violating S (in bitmask order) is reported as the witness.
    """
    _subsets_guard(g0.n)
    if len(hp.eta) != g0.n:
        raise GraphError("eta needs one value per vertex")
    counted = g0 if supergraph is None else supergraph
    props = set_function_properties(l, g0.n)
    reasons = []
    if not (props.intersecting_supermodular and props.nonincreasing and props.nonnegative):
        reasons.append(f"l fails the structural requirements: {props._asdict()}")
    lam = Fraction(hp.lam)
    full = l(range(g0.n))
    for mask in range(1 << g0.n):
        s = [v for v in g0.vertices if mask >> v & 1]
        lhs = _as_fraction(theta(g0, l, s))
        ls = l.value(mask)
        rhs = (
            1
            + sum(Fraction(hp.eta[v]) - 2 * l({v}) for v in s)
            + full
            + ls
            - lam * (edges_inside(counted, s) + ls)
        )
        if not lhs < rhs:
            return InequalityCheck(not reasons, False, lhs, rhs, "; ".join(reasons), {"S": s})
    return InequalityCheck(not reasons, True, detail="; ".join(reasons))


def theorem31_caps(
    g0: MultiGraph, l: SetFunction, hp: HypothesisParams
) -> DegreeCapProfile:
    """Per-vertex caps ceil(eta(v) - lam l(v)) + max(0, d_F(v) - l(v))."""
    caps = []
    for v in g0.vertices:
        base = math.ceil(Fraction(hp.eta[v]) - Fraction(hp.lam) * l({v}))
        extra = 0 if hp.required is None else max(0, hp.required.degree(v) - l({v}))
        caps.append(max(0, base + extra))
    return DegreeCapProfile(tuple(caps))


# -- capped factor search ----------------------------------------------------


def search_capped_factor(
    g0: MultiGraph,
    m: int,
    caps: DegreeCapProfile,
    f: Optional[MultiGraph] = None,
    exhaustive_max_n: int = SEARCH_EXHAUSTIVE_MAX_N,
) -> Optional[FactorCertificate]:
    """An m-tree-connected factor of ``g0`` containing ``f`` and respecting ``caps``.

    Edges are deleted one at a time at the vertex furthest over its cap,
    preferring edges whose other end is also over (then of high degree), as
    long as ``m`` spanning trees survive. The first descent is the greedy
    phase; if it stalls and ``n <= exhaustive_max_n`` the descent backtracks
    over every choice, so ``None`` means no such factor exists. Beyond that
    size a stalled greedy phase raises :class:`CapacityError`.
    """
    if len(caps.caps) != g0.n:
        raise GraphError("cap profile size does not match the graph")
    required = frozenset() if f is None else frozenset(f.edge_ids)
    if f is not None and not f.is_spanning_subgraph_of(g0):
        raise GraphError("f must be a spanning subgraph of g0")
    cap = caps.caps
    meta = {"m": m, "caps": list(cap)}

    def done(edges, mode):
        return FactorCertificate.build(g0, edges, m=m, meta={**meta, "mode": mode})

    if g0.n > 1 and m > 0:
        if min(cap) < m or sum(cap) < 2 * m * (g0.n - 1):
            return None
    if f is not None and not caps.allows(f.degrees()):
        return None
    if not is_tree_connected(g0, m):
        return None

    def step_options(edges: frozenset, deg: list[int]):
        over = [d - c for d, c in zip(deg, cap)]
        v = max(g0.vertices, key=lambda x: (over[x], -x))
        if over[v] <= 0:
            return None, []
        seen_nbrs = set()
        options = []
        for eid in g0.incident(v):
            if eid not in edges or eid in required:
                continue
            w = g0.other_end(eid, v)
            if w in seen_nbrs:
                continue
            seen_nbrs.add(w)
            options.append((-over[w], -deg[w], eid))
        options.sort()
        return v, [eid for _, _, eid in options]

    def degrees_of(edges):
        deg = [0] * g0.n
        for eid in edges:
            a, b = g0.endpoints(eid)
            deg[a] += 1
            deg[b] += 1
        return deg

    def still_connected(edges):
        return is_tree_connected(g0.spanning_subgraph(edges), m)

    start = frozenset(g0.edge_ids)

    # greedy phase
    edges = start
    while True:
        v, options = step_options(edges, degrees_of(edges))
        if v is None:
            return done(edges, "greedy")
        for eid in options:
            trial = edges - {eid}
            if still_connected(trial):
                edges = trial
                break
        else:
            break

    if g0.n > exhaustive_max_n:
        raise CapacityError(
            f"greedy deletion stalled and n = {g0.n} exceeds the exhaustive limit {exhaustive_max_n}"
        )

    failed: set[frozenset] = set()

    def dfs(edges):
        if edges in failed:
            return None
        v, options = step_options(edges, degrees_of(edges))
        if v is None:
            return edges
        for eid in options:
            trial = edges - {eid}
            if trial not in failed and still_connected(trial):
                found = dfs(trial)
                if found is not None:
                    return found
        failed.add(edges)
        return None

    found = dfs(start)
    return None if found is None else done(found, "exhaustive")


def _required_packing(g: MultiGraph, need: int) -> None:
    extract_spanning_trees(g, need)  # raises NotTreeConnected with a certificate


def pipeline_cor36(
    g: MultiGraph, m: int, u: Optional[int] = None, c: int = 2, seed: int = 0
) -> FactorCertificate:
    """A c-partite m-tree-connected factor with d_H(v) <= ceil((2c-1)/(2c) d_G(v)).

    Stage 1 takes an edge-maximum c-partite induced factor G0 (exhaustive up to
    12 vertices, local search beyond). Stage 2 searches G0 for an
    m-tree-connected factor under caps ceil(d_G0(v)/2 + (c-1)/(2c) d_G(v)),
    floored at ``u``. The graph must be ceil(cm/(c-1))-tree-connected.
    """
    if u is not None:
        check_vertices(g, [u])
    need = -(-c * m // (c - 1))
    _required_packing(g, need)
    if g.n <= CPARTITE_MAX_N:
        part = exhaustive_max_cpartite(g, c)
    else:
        part = local_search_cpartite(g, c, seed=seed, restarts=16)
        if not is_tree_connected(part.factor, m):
            raise PipelineStall("cpartite", f"local optimum is not {m}-tree-connected")
    g0 = part.factor
    eps = Fraction(c - 1, c)
    stage_caps = DegreeCapProfile.from_bounds(
        [Fraction(g0.degree(v), 2) + eps * g.degree(v) / 2 for v in g.vertices], u
    )
    final_caps = DegreeCapProfile.from_bounds(
        [Fraction(2 * c - 1, 2 * c) * g.degree(v) for v in g.vertices], u
    )
    cert = search_capped_factor(g0, m, stage_caps)
    if cert is None:
        log.error(
            "FALSIFICATION: no %d-tree-connected factor under caps %s in the %d-partite optimum",
            m, stage_caps.caps, c,
        )
        raise PipelineStall("capped-search", "exhaustive search found no factor (falsification event)")
    cert = FactorCertificate.build(
        g,
        cert.edge_ids,
        m=m,
        meta={
            "theorem": "capped_factor",
            "c": c,
            "m": m,
            "u": u,
            "assignment": list(part.assignment),
            "stage_caps": list(stage_caps.caps),
            "final_caps": list(final_caps.caps),
            "search_mode": cert.meta["mode"],
        },
    )
    assert final_caps.allows(cert.degrees), "final degree caps violated"
    return cert
