"""Command-line front end.

All reports are JSON on stdout; human-readable summaries go to stderr under
--verbose.  Exit codes: 0 = pass, 1 = fail with witness, 2 = invalid input
or resource error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import axioms, farey, graph_core, surface_map, topology
from .graph_core import Graph, InvalidGraphError
from .surface_map import MapError, OrientedMap, TorusMap

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


class LoadedFile:
    """A parsed input file: always a graph, possibly a map or fragment."""

    def __init__(self, graph: Graph, m: Optional[OrientedMap] = None,
                 torus: Optional[TorusMap] = None, fragment=None):
        self.graph = graph
        self.map = m
        self.torus = torus
        self.fragment = fragment

    def require_map(self) -> OrientedMap:
        if self.map is None:
            raise InvalidGraphError("this operation needs a map file (rotations)")
        return self.map

    def require_torus(self) -> TorusMap:
        if self.torus is None:
            raise InvalidGraphError(
                "this operation needs a torus map file (rotations + displacements)"
            )
        return self.torus


def load_file(path: str) -> LoadedFile:
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if not isinstance(obj, dict):
        raise InvalidGraphError(f"{path}: top-level JSON object expected")
    if "rotations" in obj:
        m = surface_map.map_from_json(obj)
        if isinstance(m, TorusMap):
            return LoadedFile(m.map.graph, m.map, m)
        return LoadedFile(m.graph, m)
    if "labels" in obj:
        frag = farey.fragment_from_json(obj)
        return LoadedFile(frag.graph, fragment=frag)
    if "vertices" in obj:
        return LoadedFile(graph_core.graph_from_json(obj))
    raise InvalidGraphError(f"{path}: unrecognized file schema")


def _emit(obj: dict, out: Optional[str]) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _note(args, msg: str) -> None:
    if args.verbose:
        print(msg, file=sys.stderr)


def _write_dot(path: str, g: Graph, labels=None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_core.graph_to_dot(g, labels))


# -- subcommands -----------------------------------------------------------


def cmd_gen(args) -> int:
    if args.kind == "farey":
        frag = farey.build_fragment(args.stages)
        obj = farey.fragment_to_json(frag)
        g, labels = frag.graph, [str(f) for f in frag.labels]
        _note(args, f"farey stage {args.stages}: {g.n} vertices, {g.edge_count} edges")
    elif args.kind == "torus":
        t = surface_map.gen_torus_triangulation(args.rows, args.cols)
        obj = surface_map.torus_to_json(t)
        g, labels = t.map.graph, None
        _note(args, f"torus {args.rows}x{args.cols}: {g.n} vertices")
    else:
        m = surface_map.gen_platonic(args.name)
        obj = surface_map.map_to_json(m)
        g, labels = m.graph, None
        _note(args, f"platonic {args.name}: {g.n} vertices")
    _emit(obj, args.out)
    if args.dot:
        _write_dot(args.dot, g, labels)
    return EXIT_PASS


def _report_exit(report: axioms.AxiomReport) -> int:
    if report.status == "pass":
        return EXIT_PASS
    if report.status == "fail":
        return EXIT_FAIL
    return EXIT_ERROR


def cmd_check(args) -> int:
    loaded = load_file(args.file)
    if args.axiom == "phi0":
        report = axioms.check_phi0(loaded.graph)
    else:
        if args.n is None:
            raise InvalidGraphError("check psi requires --n")
        if args.mode == "certificate":
            # certifying psi_n needs the hypothesis at n+1
            report = axioms.certify_psi(loaded.require_map(), args.n + 1)
        else:
            report = axioms.check_psi_exhaustive(loaded.graph, args.n, args.budget)
    _emit(report.to_json(), args.out)
    _note(args, f"{report.axiom}: {report.status}")
    if args.dot and report.witness and "vertices" in report.witness:
        sub, _ = graph_core.induced_subgraph(loaded.graph, report.witness["vertices"])
        _write_dot(args.dot, sub)
    return _report_exit(report)


def cmd_analyze(args) -> int:
    loaded = load_file(args.file)
    g = loaded.graph
    out: dict = {"vertices": g.n, "edges": g.edge_count}
    if args.genus:
        out["genus"] = surface_map.euler_genus(loaded.require_map())
    if args.facewidth:
        fw = topology.face_width(loaded.require_map())
        out["facewidth"] = "infinite" if fw == float("inf") else int(fw)
    if args.connectivity:
        out["connectivity"] = graph_core.vertex_connectivity(g)
    if args.chordal:
        ok, wit = graph_core.is_chordal(g)
        out["chordal"] = ok
        out["chordal_witness"] = wit
    if args.k4:
        k4 = graph_core.contains_k4(g)
        out["k4"] = list(k4) if k4 else None
    _emit(out, args.out)
    return EXIT_PASS


def cmd_lift(args) -> int:
    loaded = load_file(args.file)
    t = loaded.require_torus()
    try:
        subset = [int(s) for s in args.subset.split(",") if s.strip() != ""]
    except ValueError:
        raise InvalidGraphError(f"bad subset spec {args.subset!r}") from None
    result = topology.lift_to_universal_cover(t, subset)
    if result.ok:
        _emit(
            {"status": "ok",
             "coords": {str(v): list(p) for v, p in sorted(result.coords.items())}},
            args.out,
        )
        return EXIT_PASS
    _emit({"status": "noncontractible", **result.witness.to_json()}, args.out)
    return EXIT_FAIL


def parse_family(spec: str) -> list[tuple[str, Graph]]:
    """Family spec: comma-separated torus:MxK, platonic:NAME, farey:K, or a
    path to a graph/map/fragment JSON file."""
    family = []
    for entry in spec.split(","):
        entry = entry.strip()
        if not entry:
            continue
        if entry.startswith("torus:"):
            m, _, k = entry[len("torus:"):].partition("x")
            g = surface_map.gen_torus_triangulation(int(m), int(k)).map.graph
        elif entry.startswith("platonic:"):
            g = surface_map.gen_platonic(entry[len("platonic:"):]).graph
        elif entry.startswith("farey:"):
            g = farey.build_fragment(int(entry[len("farey:"):])).graph
        else:
            g = load_file(entry).graph
        family.append((entry, g))
    if not family:
        raise InvalidGraphError("empty family spec")
    return family


def cmd_batch(args) -> int:
    family = parse_family(args.family)
    report = axioms.pseudofiniteness_run(args.nmax, family, budget=args.budget)
    _emit(report, args.out)
    _note(args, "complete" if report["complete"] else "family exhausted for some n")
    return EXIT_PASS if report["complete"] else EXIT_FAIL


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fareycheck",
        description="Generate surface-embedded graphs and check the Farey "
        "graph axioms on them.",
    )
    p.add_argument("--verbose", action="store_true",
                   help="human-readable summary on stderr")
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("FAREYCHECK_THREADS", "1")),
                   help="worker thread cap (current kernels are serial)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized subcommands (reserved)")
    sub = p.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="generate a structure as JSON")
    gsub = gen.add_subparsers(dest="kind", required=True)
    gf = gsub.add_parser("farey", help="Farey fragment by mediant iteration")
    gf.add_argument("--stages", type=int, required=True)
    gt = gsub.add_parser("torus", help="6-regular torus triangulation")
    gt.add_argument("--rows", type=int, required=True)
    gt.add_argument("--cols", type=int, required=True)
    gp = gsub.add_parser("platonic", help="octahedron or icosahedron sphere map")
    gp.add_argument("--name", required=True)
    for sp in (gf, gt, gp):
        sp.add_argument("--out", help="write JSON here instead of stdout")
        sp.add_argument("--dot", help="also write a DOT export")
        sp.set_defaults(func=cmd_gen)

    chk = sub.add_parser("check", help="run an axiom check on a file")
    chk.add_argument("axiom", choices=["phi0", "psi"])
    chk.add_argument("file")
    chk.add_argument("--n", type=int, help="psi index to check")
    chk.add_argument("--mode", choices=["exhaustive", "certificate"],
                     default="exhaustive")
    chk.add_argument("--budget", type=int, default=axioms.DEFAULT_SUBGRAPH_BUDGET)
    chk.add_argument("--out")
    chk.add_argument("--dot", help="DOT export of a fail witness")
    chk.set_defaults(func=cmd_check)

    ana = sub.add_parser("analyze", help="structural statistics")
    ana.add_argument("file")
    for flag in ("genus", "facewidth", "connectivity", "chordal", "k4"):
        ana.add_argument(f"--{flag}", action="store_true")
    ana.add_argument("--out")
    ana.set_defaults(func=cmd_analyze)

    lft = sub.add_parser("lift", help="develop a subset into the Z^2 cover")
    lft.add_argument("file")
    lft.add_argument("--subset", required=True, help="comma-separated vertex ids")
    lft.add_argument("--out")
    lft.set_defaults(func=cmd_lift)

    bat = sub.add_parser("batch", help="batch acceptance runs")
    bsub = bat.add_subparsers(dest="batch_kind", required=True)
    bp = bsub.add_parser("pseudofinite",
                         help="find witnesses for phi0 and psi_1..psi_nmax")
    bp.add_argument("--nmax", type=int, required=True)
    bp.add_argument("--family", required=True)
    bp.add_argument("--budget", type=int, default=axioms.DEFAULT_SUBGRAPH_BUDGET)
    bp.add_argument("--out")
    bp.set_defaults(func=cmd_batch)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags, matching our error convention
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InvalidGraphError, MapError, topology.GenusNotSupportedError,
            axioms.BudgetExceededError, ValueError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
