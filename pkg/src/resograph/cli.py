"""Command line front-end.

Exit codes: 0 success, 1 a checked identity failed, 2 usage error,
3 unreadable or invalid input graph, 4 resource limit hit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import dot
from .errors import (
    CountLimitExceeded,
    FormulaViolated,
    GraphInputError,
    SizeLimitExceeded,
)
from .lattice import structure, verify_distance_formula, verify_height_formula
from .matchings import enumerate_perfect_matchings, matching_edges, set_matching_cap
from .median import inner_dual, is_median_graph, median_witness, theta_induced_graph
from .planar import load_graph
from .report import to_document
from .verify import summary_row, verify_graph

log = logging.getLogger("resograph")

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_LIMIT = 4

COMMANDS = ("graph", "matchings", "resonance", "lattice", "theta", "median", "verify", "sweep")


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    json_out: str | None = None
    emit_dot: str | None = None
    emit_digraph: str | None = None
    cap: int = 100_000
    jobs: int = 1
    count_only: bool = False
    check: bool = False
    all_rfds: bool = False

    def validate(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.cap < 2:
            raise ValueError("--cap must be at least 2")
        if not self.inputs:
            raise ValueError("at least one input is required")
        if self.jobs < 1:
            raise ValueError("--jobs must be positive")


def _write(path, text):
    # "-" sends the artifact to stdout in place of the JSON summary
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _emit_json(cfg, payload):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if cfg.json_out:
        _write(cfg.json_out, text + "\n")
    if "-" not in (cfg.emit_dot, cfg.emit_digraph):
        print(text)


def _cmd_graph(cfg, g):
    if cfg.emit_dot:
        _write(cfg.emit_dot, dot.plane_graph_dot(g))
    _emit_json(cfg, {
        "graph": g.name,
        "colors": dict(zip(g.ids, g.colors)),
        "faces": [{"id": f.id, "infinite": f.is_infinite,
                   "boundary": [g.ids[v] for v in f.vertices]} for f in g.faces],
    })
    return EXIT_OK


def _cmd_matchings(cfg, g):
    ms = enumerate_perfect_matchings(g)
    if cfg.count_only:
        _emit_json(cfg, {"graph": g.name, "count": len(ms)})
    else:
        _emit_json(cfg, [sorted(sorted((g.ids[u], g.ids[v])) for u, v in matching_edges(g, m))
                         for m in ms])
    return EXIT_OK


def _cmd_resonance(cfg, g):
    s = structure(g)
    if cfg.emit_dot:
        _write(cfg.emit_dot, dot.resonance_dot(s.z))
    if cfg.emit_digraph:
        _write(cfg.emit_digraph, dot.digraph_dot(s.digraph))
    _emit_json(cfg, {"graph": g.name, "vertices": len(s.z), "edges": len(s.z.edges),
                     "arcs": [list(a) for a in sorted(s.digraph.arcs)]})
    return EXIT_OK


def _cmd_lattice(cfg, g):
    s = structure(g)
    out = {"graph": g.name, "elements": len(s.z), "height": s.lattice.height,
           "max": s.i1, "min": s.i0, "covers": len(s.lattice.covers())}
    code = EXIT_OK
    if cfg.check:
        try:
            out["height_formula"] = verify_height_formula(g).to_dict()
            out["distance_formula"] = verify_distance_formula(g).to_dict()
        except FormulaViolated as exc:
            out["violation"] = str(exc)
            code = EXIT_VERIFY
    _emit_json(cfg, out)
    return code


def _cmd_theta(cfg, g):
    zx = structure(g).z.to_networkx()
    theta = theta_induced_graph(zx)
    dual = inner_dual(g)
    if cfg.emit_dot:
        _write(cfg.emit_dot, dot.theta_dual_dot(theta, dual))
    from .median import graphs_isomorphic
    _emit_json(cfg, {
        "graph": g.name,
        "theta_classes": theta.number_of_nodes(),
        "theta_edges": sorted([a, b] for a, b in theta.edges()),
        "witnesses": {f"{a}-{b}": list(map(list, d["witness"]))
                      for a, b, d in theta.edges(data=True)},
        "inner_dual_edges": sorted(sorted([a, b]) for a, b in dual.edges()),
        "isomorphic": graphs_isomorphic(theta, dual),
    })
    return EXIT_OK


def _cmd_median(cfg, g):
    zx = structure(g).z.to_networkx()
    wit = median_witness(zx)
    _emit_json(cfg, {"graph": g.name, "median": wit is None,
                     "witness": list(wit) if wit else None})
    if cfg.check and not is_median_graph(zx):
        return EXIT_VERIFY
    return EXIT_OK


def _verify_one(args):
    path, all_rfds, cap = args
    set_matching_cap(cap)
    g = load_graph(path)
    rep = verify_graph(g, all_rfds=all_rfds, name=g.name)
    return rep, summary_row(g, rep)


def _cmd_verify(cfg):
    reports = _run_many(cfg, cfg.inputs)
    doc = to_document([r for r, _ in reports])
    _emit_json(cfg, doc)
    return EXIT_OK if doc["ok"] else EXIT_VERIFY


def _run_many(cfg, paths):
    work = [(str(p), cfg.all_rfds, cfg.cap) for p in paths]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            return list(ex.map(_verify_one, work))
    return [_verify_one(w) for w in work]


def corpus_sweep(cfg, directory):
    paths = sorted(Path(directory).glob("*.json"))
    results = _run_many(cfg, paths)
    return [row for _, row in results], [rep for rep, _ in results]


def _cmd_sweep(cfg):
    rows, reports = [], []
    for d in cfg.inputs:
        r, rep = corpus_sweep(cfg, d)
        rows += r
        reports += rep
    cols = ["graph", "V", "E", "matchings", "height", "finite_faces", "forcing", "pce",
            "median", "theta_iso_dual", "ok"]
    if cfg.json_out:
        doc = to_document(reports)
        doc["table"] = rows
        _write(cfg.json_out, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    print("\t".join(cols))
    for row in rows:
        print("\t".join(str(row[c]) for c in cols))
    bad = [r["graph"] for r in rows if not r["ok"]]
    if bad:
        print(f"violations in: {', '.join(bad)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def run(cfg):
    cfg.validate()
    set_matching_cap(cfg.cap)
    try:
        if cfg.command == "verify":
            return _cmd_verify(cfg)
        if cfg.command == "sweep":
            return _cmd_sweep(cfg)
        handler = globals()[f"_cmd_{cfg.command}"]
        code = EXIT_OK
        for path in cfg.inputs:
            code = max(code, handler(cfg, load_graph(path)))
        return code
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CountLimitExceeded, SizeLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


def build_parser():
    parser = argparse.ArgumentParser(
        prog="resograph",
        description="Resonance graphs of plane elementary bipartite graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", action="append", default=[], metavar="PATH",
                        help="input graph JSON (repeatable)")
    common.add_argument("--json", dest="json_out", metavar="PATH",
                        help="also write the JSON output to PATH")
    common.add_argument("--emit-dot", metavar="PATH", nargs="?", const="-",
                        help="write Graphviz DOT to PATH (stdout when PATH is omitted)")
    common.add_argument("--cap", type=int, default=100_000,
                        help="maximum number of perfect matchings")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("graph", parents=[common], help="faces and colouring of the drawing")
    p = sub.add_parser("matchings", parents=[common], help="list perfect matchings")
    p.add_argument("--count-only", action="store_true")
    p = sub.add_parser("resonance", parents=[common], help="resonance graph and digraph")
    p.add_argument("--emit-digraph", metavar="PATH", nargs="?", const="-")
    p = sub.add_parser("lattice", parents=[common], help="matching lattice")
    p.add_argument("--verify", dest="check", action="store_true",
                   help="check the height and distance formulas")
    sub.add_parser("theta", parents=[common], help="Theta(Z(G)) against the inner dual")
    p = sub.add_parser("median", parents=[common], help="median-graph scan of Z(G)")
    p.add_argument("--check", action="store_true", help="exit nonzero unless median")
    p = sub.add_parser("verify", parents=[common], help="run every check")
    p.add_argument("--all-rfds", action="store_true",
                   help="examine every reducible face decomposition")
    p = sub.add_parser("sweep", parents=[common], help="check every graph in directories")
    p.add_argument("dirs", nargs="*", metavar="DIR")
    p.add_argument("--all-rfds", action="store_true")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    inputs = list(args.dirs) if args.command == "sweep" else list(args.graph)
    cfg = RunConfig(
        command=args.command,
        inputs=inputs,
        json_out=args.json_out,
        emit_dot=args.emit_dot,
        emit_digraph=getattr(args, "emit_digraph", None),
        cap=args.cap,
        jobs=args.jobs,
        count_only=getattr(args, "count_only", False),
        check=getattr(args, "check", False),
        all_rfds=getattr(args, "all_rfds", False),
    )
    try:
        cfg.validate()
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
