"""Corpus campaigns: generate instances, run theorem checks, assemble a report."""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .connectivity import theta
from .cpartite import cyclic_shift_certify, exhaustive_max_cpartite
from .degree_bounded import (
    min_cut_ratio,
    pipeline_cor36,
    verify_lemma32_all,
    verify_thm37_all,
)
from .errors import CapacityError, GraphError, NotTreeConnected, PipelineStall
from .generators import generate
from .graph import MultiGraph, is_bipartite
from .modulo import akfactor_pipeline, even_factor_pipeline, modulo_factor_search
from .oracles import nash_williams_number, toughness_by_enumeration
from .packing import is_tree_connected, tree_packing_number
from .setfunc import SetFunction
from .toughness import toughness

SCHEMA = 1


@dataclass
class CorpusSpec:
    """One generator sweep. List-valued params are expanded as a grid."""

    generator: str
    params: dict = field(default_factory=dict)
    seed: int = 0
    count: int = 1
    theorems: list = field(default_factory=list)
    options: dict = field(default_factory=dict)
    limit_n: int = 10

    @classmethod
    def from_dict(cls, d: dict) -> "CorpusSpec":
        return cls(**d)

    def instances(self):
        keys = sorted(self.params)
        grids = [v if isinstance(v, list) else [v] for v in (self.params[k] for k in keys)]
        for combo in itertools.product(*grids):
            params = dict(zip(keys, combo))
            for i in range(self.count):
                yield params, self.seed + i


# -- per-theorem checks ------------------------------------------------------
# Each returns (hypothesis_ok, verdict, witness) and may raise CapacityError.


def _subsets(n: int):
    for mask in range(1 << n):
        yield [v for v in range(n) if mask >> v & 1]


def check_nash_williams(g: MultiGraph, opts: dict, seed: int):
    fast = tree_packing_number(g)
    slow = nash_williams_number(g)
    return True, fast == slow, {"packing_number": fast, "partition_formula": slow}


def check_cpartite_bound(g: MultiGraph, opts: dict, seed: int):
    c = opts.get("c", 2)
    m = opts.get("m", 1)
    if g.n > 10:
        raise CapacityError("set bound enumeration limited to n <= 10")
    f = exhaustive_max_cpartite(g, c)
    bad_sets = [x for x in _subsets(g.n) if not cyclic_shift_certify(g, f, x)]
    need = -(-c * m // (c - 1))
    hyp = is_tree_connected(g, need)
    factor_ok = is_tree_connected(f.factor, m)
    verdict = not bad_sets and (factor_ok or not hyp)
    witness = {"c": c, "m": m, "crossing": f.crossing_count, "set_violations": len(bad_sets), "factor_tree_connected": factor_ok}
    return hyp, verdict, witness


def check_capped_factor(g: MultiGraph, opts: dict, seed: int):
    m = opts.get("m", 1)
    u = opts.get("u", 0)
    hyp = is_tree_connected(g, 2 * m)
    if not hyp:
        return False, None, {"reason": f"not {2 * m}-tree-connected"}
    cert = pipeline_cor36(g, m, u=u)
    problems = cert.problems(g)
    caps_ok = all(d <= c for d, c in zip(cert.degrees, cert.meta["final_caps"]))
    verdict = not problems and cert.bipartite and cert.packing is not None and caps_ok
    return True, verdict, {"degrees": list(cert.degrees), "final_caps": cert.meta["final_caps"], "problems": problems}


def _subgraph_for(g: MultiGraph, opts: dict, seed: int) -> MultiGraph:
    mode = opts.get("g0", "self")
    if mode == "self":
        return g
    if mode == "bipartite":
        return exhaustive_max_cpartite(g, 2).factor
    if mode == "random":
        rng = random.Random(seed)
        return g.spanning_subgraph(e for e in g.edge_ids if rng.random() < 0.6)
    raise GraphError(f"unknown g0 mode {mode!r}")


def _eps_for(g, g0, opts):
    eps = opts.get("eps", "auto")
    if eps == "auto":
        ratio = min_cut_ratio(g, g0)
        return None if not ratio else min(ratio, Fraction(1))
    return Fraction(eps)


def check_theta_cut_bound(g: MultiGraph, opts: dict, seed: int):
    g0 = _subgraph_for(g, opts, seed)
    eps = _eps_for(g, g0, opts)
    if eps is None:
        return False, None, {"reason": "no positive cut ratio"}
    l = SetFunction.uniform(opts.get("l", 1))
    result = verify_lemma32_all(g, g0, l, eps)
    return result.preconditions_ok, result.verdict, {"eps": str(eps), **result.witness}


def check_theta_scaled_bound(g: MultiGraph, opts: dict, seed: int):
    g0 = _subgraph_for(g, opts, seed)
    k = Fraction(opts.get("k", 2))
    l = SetFunction.uniform(opts.get("l", 1))
    result = verify_thm37_all(g, g0, l, k)
    return result.preconditions_ok, result.verdict, {"k": str(k), **result.witness}


def check_toughness(g: MultiGraph, opts: dict, seed: int):
    report = toughness(g)
    ref, _ = toughness_by_enumeration(g)
    fast = None if report.unbounded else report.value
    return True, fast == ref, {"toughness": str(report)}


def check_modulo_factor(g: MultiGraph, opts: dict, seed: int):
    k = opts.get("k", 1)
    u = opts.get("u", 0)
    if is_bipartite(g) is None:
        return False, None, {"reason": "not bipartite"}
    hyp = is_tree_connected(g, 2 * k - 1)
    cert = modulo_factor_search(g, k, u)
    if cert is None:
        return hyp, False, {"reason": "no factor found"}
    problems = cert.problems(g)
    caps_ok = all(d <= g.degree(v) - k + 1 for v, d in enumerate(cert.degrees) if v != u)
    return hyp, not problems and cert.connected and caps_ok, {"degrees": list(cert.degrees), "problems": problems}


def _pipeline_check(build: Callable, allowed: set):
    def check(g: MultiGraph, opts: dict, seed: int):
        cert = build(g, opts)
        problems = cert.problems(g)
        verdict = not problems and cert.bipartite and cert.connected and set(cert.degrees) <= allowed(opts)
        witness = {"degrees": list(cert.degrees), "route": cert.meta.get("route"), "problems": problems}
        return cert.meta.get("hypothesis_ok"), verdict, witness

    return check


check_akfactor = _pipeline_check(
    lambda g, o: akfactor_pipeline(g, o.get("k", 1)),
    lambda o: {o.get("k", 1) * i for i in (1, 2, 3, 4)},
)
check_even246 = _pipeline_check(lambda g, o: even_factor_pipeline(g), lambda o: {2, 4, 6})


def check_scaling(g: MultiGraph, opts: dict, seed: int):
    bad = []
    for base in opts.get("scaling_l", [1, 2]):
        low = theta(g, SetFunction.uniform(base))
        for k in opts.get("scaling_k", [2, 3]):
            high = theta(g, SetFunction.uniform(k * base))
            if not k * low <= high:
                bad.append({"l": base, "k": k, "theta": str(low), "theta_kl": str(high)})
    return True, not bad, {"violations": bad}


CHECKS = {
    "nash_williams": check_nash_williams,
    "cpartite_bound": check_cpartite_bound,
    "capped_factor": check_capped_factor,
    "theta_cut_bound": check_theta_cut_bound,
    "theta_scaled_bound": check_theta_scaled_bound,
    "toughness": check_toughness,
    "modulo_factor": check_modulo_factor,
    "akfactor": check_akfactor,
    "even246": check_even246,
    "scaling": check_scaling,
}


def run_campaign(specs: list, timings: bool = False) -> dict:
    """Run every corpus spec and return the report as a JSON-ready dict.

    Records come out in spec, grid, seed, theorem order. Wall-clock times are
    only included when ``timings`` is set, so default reports are reproducible
    byte for byte.
    """
    records = []
    for ci, spec in enumerate(specs):
        if isinstance(spec, dict):
            spec = CorpusSpec.from_dict(spec)
        for ii, (params, seed) in enumerate(spec.instances()):
            base = {
                "generator": spec.generator,
                "params": params,
                "seed": seed,
            }
            try:
                g = generate(spec.generator, params, seed)
            except GraphError as exc:
                records.append({**base, "instance_id": f"c{ci}-i{ii}", "theorem": None, "status": "error", "reason": str(exc)})
                continue
            for theorem in spec.theorems:
                rec = {**base, "instance_id": f"c{ci}-i{ii}-{theorem}", "theorem": theorem, "n": g.n, "edges": g.num_edges}
                if g.n > spec.limit_n:
                    rec.update(status="skipped", reason=f"n = {g.n} exceeds limit_n = {spec.limit_n}")
                    records.append(rec)
                    continue
                start = time.perf_counter()
                try:
                    hyp, verdict, witness = CHECKS[theorem](g, spec.options, seed)
                    rec.update(status="ok", hypothesis_ok=hyp, verdict=verdict, witness=witness)
                except CapacityError as exc:
                    rec.update(status="skipped", reason=f"capacity: {exc}")
                except (PipelineStall, NotTreeConnected) as exc:
                    hyp = getattr(exc, "hypothesis", {}).get("hypothesis_ok")
                    rec.update(status="ok", hypothesis_ok=hyp, verdict=False, witness={"error": str(exc)})
                except GraphError as exc:
                    rec.update(status="error", reason=str(exc))
                if timings:
                    rec["elapsed"] = round(time.perf_counter() - start, 6)
                rec["falsification"] = rec.get("status") == "ok" and rec.get("hypothesis_ok") is True and rec.get("verdict") is False
                records.append(rec)
    return {"schema": SCHEMA, "records": records, "summary": summarize(records)}


def summarize(records: list) -> dict:
    by_theorem: dict = {}
    for rec in records:
        row = by_theorem.setdefault(str(rec.get("theorem")), {"ok": 0, "verified": 0, "skipped": 0, "falsifications": 0})
        if rec.get("status") == "ok":
            row["ok"] += 1
            row["verified"] += rec.get("verdict") is True
        elif rec.get("status") == "skipped":
            row["skipped"] += 1
        row["falsifications"] += bool(rec.get("falsification"))
    return {
        "instances": len(records),
        "falsifications": sum(bool(r.get("falsification")) for r in records),
        "by_theorem": dict(sorted(by_theorem.items())),
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def report_text(report: dict) -> str:
    lines = [f"instances: {report['summary']['instances']}"]
    for name, row in report["summary"]["by_theorem"].items():
        lines.append(
            f"  {name:<18} ok={row['ok']:<5} verified={row['verified']:<5} "
            f"skipped={row['skipped']:<4} falsifications={row['falsifications']}"
        )
    falsified = [r for r in report["records"] if r.get("falsification")]
    if falsified:
        lines.append("!!! FALSIFICATION EVENTS !!!")
        lines.extend(f"  {r['instance_id']}: {r.get('witness')}" for r in falsified)
    else:
        lines.append("no falsification events")
    return "\n".join(lines) + "\n"


DEFAULT_CAMPAIGN = [
    {"generator": "random_multigraph", "params": {"n": [3, 4, 5, 6, 7], "edges": [6, 10, 14]}, "count": 4, "theorems": ["nash_williams", "scaling", "toughness"]},
    {"generator": "complete", "params": {"n": [4, 5, 6, 7, 8]}, "theorems": ["capped_factor", "akfactor"], "options": {"m": 1, "k": 1}},
    {"generator": "cycle", "params": {"n": [4, 5, 6, 7, 8]}, "theorems": ["theta_cut_bound"], "options": {"g0": "self", "eps": 1}},
    {"generator": "random_tree_connected", "params": {"n": [4, 5, 6], "m": 2, "extra": 1}, "count": 3, "theorems": ["cpartite_bound", "capped_factor", "theta_cut_bound", "theta_scaled_bound"], "options": {"m": 1, "g0": "bipartite", "k": 2}},
    {"generator": "random_bipartite_tree_connected", "params": {"a": [2, 3], "b": [3, 4], "m": 1}, "count": 3, "theorems": ["modulo_factor"], "options": {"k": 1}},
    {"generator": "random_bipartite_tree_connected", "params": {"a": [3, 4], "b": 4, "m": 3}, "count": 2, "theorems": ["modulo_factor"], "options": {"k": 2}},
    {"generator": "complete", "params": {"n": [6, 7, 8]}, "theorems": ["even246"]},
]


def default_specs(seed: int = 0, limit_n: Optional[int] = None) -> list:
    specs = []
    for d in DEFAULT_CAMPAIGN:
        d = dict(d, seed=seed + d.get("seed", 0))
        if limit_n is not None:
            d["limit_n"] = limit_n
        specs.append(CorpusSpec.from_dict(d))
    return specs
