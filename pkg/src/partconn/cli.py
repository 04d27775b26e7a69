"""Command line interface: ``partconn <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import campaign
from .connectivity import partition_connected_components, theta
from .cpartite import exhaustive_max_cpartite, local_search_cpartite
from .degree_bounded import pipeline_cor36
from .errors import CapacityError, GraphError, NotTreeConnected, PipelineStall
from .generators import generate
from .graph import format_edge_list, load_graph
from .modulo import akfactor_pipeline, modulo_factor_search
from .packing import extract_spanning_trees, tree_packing_number
from .setfunc import SetFunction, load_table
from .toughness import toughness


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        doc = {"schema": campaign.SCHEMA, **payload}
        Path(args.json).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _parse_value(raw: str):
    for cast in (int, float):
        try:
            return cast(raw)
        except ValueError:
            pass
    return {"true": True, "false": False}.get(raw.lower(), raw)


def cmd_gen(args) -> int:
    params = {}
    for item in args.param or []:
        key, _, value = item.partition("=")
        params[key] = _parse_value(value)
    if args.double:
        params["double"] = args.double
    g = generate(args.kind, params, args.seed)
    text = format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_pack(args) -> int:
    g = load_graph(args.input)
    if args.m is None:
        number = tree_packing_number(g)
        _emit(args, {"theorem": "packing", "packing_number": number}, f"packing number: {number}")
        return 0
    try:
        trees = extract_spanning_trees(g, args.m)
    except NotTreeConnected as exc:
        parts = [sorted(p) for p in exc.partition]
        _emit(
            args,
            {"theorem": "packing", "m": args.m, "verdict": False, "partition": parts, "crossing": exc.crossing},
            f"not {args.m}-tree-connected; partition {parts} has {exc.crossing} crossing edges",
        )
        return 1
    lines = [f"tree {i}: {' '.join(map(str, sorted(t)))}" for i, t in enumerate(trees)]
    _emit(args, {"theorem": "packing", "m": args.m, "verdict": True, "trees": [sorted(t) for t in trees]}, "\n".join(lines))
    return 0


def cmd_theta(args) -> int:
    g = load_graph(args.input)
    l = load_table(args.table, g.n) if args.table else SetFunction.uniform(args.m)
    remove = [int(v) for v in args.remove.split(",")] if args.remove else []
    value = theta(g, l, remove)
    parts = [sorted(p) for p in partition_connected_components(g, l)]
    _emit(
        args,
        {"theorem": "theta", "theta": str(value), "components": parts, "removed": remove},
        f"theta = {value}\ncomponents of G: {parts}",
    )
    return 0


def cmd_cpartite(args) -> int:
    g = load_graph(args.input)
    if args.local:
        f = local_search_cpartite(g, args.c, seed=args.seed, restarts=args.restarts)
    else:
        f = exhaustive_max_cpartite(g, args.c)
    _emit(
        args,
        {"theorem": "cpartite", "c": args.c, "assignment": list(f.assignment), "edge_ids": sorted(f.factor.edge_ids), "crossing_count": f.crossing_count},
        f.format(),
    )
    return 0


def cmd_toughness(args) -> int:
    report = toughness(load_graph(args.input))
    _emit(args, {"theorem": "toughness", **report.to_json()}, str(report))
    return 0


def _certificate_out(args, theorem: str, g, cert, hypothesis_ok=True) -> int:
    problems = cert.problems(g)
    _emit(
        args,
        {
            "instance_id": str(args.input),
            "theorem": theorem,
            "preconditions_ok": hypothesis_ok,
            "verdict": not problems,
            "witness": cert.to_json(),
        },
        f"edges: {' '.join(map(str, sorted(cert.edge_ids)))}\ndegrees: {list(cert.degrees)}\n"
        f"connected={cert.connected} bipartite={cert.bipartite} problems={problems or 'none'}",
    )
    return 0 if not problems else 1


def cmd_factor34(args) -> int:
    g = load_graph(args.input)
    cert = pipeline_cor36(g, args.m, u=args.u, c=args.c, seed=args.seed)
    return _certificate_out(args, "capped_factor", g, cert)


def cmd_modfactor(args) -> int:
    g = load_graph(args.input)
    cert = modulo_factor_search(g, args.k, args.u if args.u is not None else 0)
    if cert is None:
        _emit(args, {"instance_id": str(args.input), "theorem": "modulo_factor", "verdict": False}, "no factor exists")
        return 1
    return _certificate_out(args, "modulo_factor", g, cert)


def cmd_akfactor(args) -> int:
    g = load_graph(args.input)
    cert = akfactor_pipeline(g, args.k)
    return _certificate_out(args, "akfactor", g, cert, cert.meta.get("hypothesis_ok"))


def cmd_verify(args) -> int:
    if args.spec:
        doc = json.loads(Path(args.spec).read_text())
        raw = doc["corpora"] if isinstance(doc, dict) else doc
        specs = []
        for d in raw:
            d = dict(d)
            d["seed"] = d.get("seed", 0) + args.seed
            if args.limit_n is not None:
                d["limit_n"] = args.limit_n
            specs.append(campaign.CorpusSpec.from_dict(d))
    else:
        specs = campaign.default_specs(args.seed, args.limit_n)
    report = campaign.run_campaign(specs, timings=args.timings)
    if args.json:
        Path(args.json).write_text(campaign.report_json(report))
    sys.stdout.write(campaign.report_text(report))
    return 1 if report["summary"]["falsifications"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partconn", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, graph=True):
        p = sub.add_parser(name, help=help_text)
        if graph:
            p.add_argument("--input", required=True, help="graph file in 'p n m' / 'e u v' format")
        p.add_argument("--json", metavar="OUT", help="also write a JSON report to OUT")
        p.set_defaults(func=fn)
        return p

    p = add("gen", cmd_gen, "generate a graph", graph=False)
    p.add_argument("kind")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--double", type=int, default=0, help="repeat every edge this many times")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = add("pack", cmd_pack, "tree packing number, or m disjoint spanning trees")
    p.add_argument("--m", type=int)

    p = add("theta", cmd_theta, "deficiency Theta_l and l-partition-connected components")
    p.add_argument("--m", type=int, default=1, help="uniform l value")
    p.add_argument("--table", help="table-mode set function file ('s <mask> <value>' lines)")
    p.add_argument("--remove", help="comma separated vertices to delete first")

    p = add("cpartite", cmd_cpartite, "edge-maximum c-partite induced factor")
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--local", action="store_true", help="local search instead of exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=1)

    add("toughness", cmd_toughness, "exact toughness with separator witness")

    p = add("factor34", cmd_factor34, "degree-capped c-partite m-tree-connected factor")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--u", type=int)
    p.add_argument("--seed", type=int, default=0)

    p = add("modfactor", cmd_modfactor, "connected modulo-k factor of a bipartite graph")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--u", type=int)

    p = add("akfactor", cmd_akfactor, "bipartite connected {k,2k,3k,4k}-factor")
    p.add_argument("--k", type=int, default=1)

    p = add("verify", cmd_verify, "run a verification campaign", graph=False)
    p.add_argument("--spec", help="campaign JSON: list of corpus specs or {'corpora': [...]}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit-n", type=int, dest="limit_n")
    p.add_argument("--timings", action="store_true", help="include wall-clock times (breaks byte-identity)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, CapacityError, PipelineStall, NotTreeConnected) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
