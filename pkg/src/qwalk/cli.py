"""Command-line front end.

    qwalk analyze  --gen p3 --model adjacency
    qwalk evolve   --graph6 A_ 0 1 --t-max 3.14159 --samples 5
    qwalk search   --model laplacian < graphs.g6
    qwalk generate p3power 2 --counts

Exit codes: 0 success, 1 usage or parse error, 2 internal consistency
violation (a Laplacian support classified quadratic).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import graph as gr
from .analysis import analyze
from .config import DEFAULT, Tolerances
from .evolution import curve_to_csv, fidelity_curve
from .hamiltonian import Kind, build
from .periodicity import CorollaryViolation
from .spectral import decompose

EXIT_OK, EXIT_USAGE, EXIT_CONSISTENCY = 0, 1, 2

MODELS = {"adjacency": Kind.ADJACENCY, "laplacian": Kind.LAPLACIAN,
          "signless": Kind.SIGNLESS_LAPLACIAN}

FAMILIES = {
    "p3power": lambda k: gr.cartesian_power(gr.path(3), k),
    "hypercube": gr.hypercube,
    "path": gr.path,
    "cycle": gr.cycle,
    "star": gr.star,
    "complete": gr.complete,
}
_GEN_ALIASES = [("p3power", "p3power"), ("hypercube", "hypercube"), ("path", "path"),
                ("cycle", "cycle"), ("star", "star"), ("complete", "complete"),
                ("q", "hypercube"), ("p", "path"), ("c", "cycle"), ("s", "star"), ("k", "complete")]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_gen(spec: str) -> gr.Graph:
    """``p3``, ``path:3``, ``q3``, ``p3power2``, ``star:3`` and so on."""
    for prefix, family in _GEN_ALIASES:
        m = re.fullmatch(rf"{prefix}:?(\d+)", spec.strip().lower())
        if m:
            return FAMILIES[family](int(m.group(1)))
    raise UsageError(f"unknown generator spec {spec!r}")


def load_graph(args) -> tuple[gr.Graph, str]:
    given = [x for x in (args.gen, args.graph6, args.edges) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --gen, --graph6, --edges")
    if args.gen is not None:
        return parse_gen(args.gen), f"gen:{args.gen}"
    if args.graph6 is not None:
        return gr.parse_graph6(args.graph6), args.graph6.strip()
    with open(args.edges) as fh:
        return gr.parse_edge_list(fh.read()), args.edges


def tolerances(args) -> Tolerances:
    return Tolerances(cluster=args.tol_cluster, support=args.tol_support,
                      pst=args.tol_pst, periodic=args.tol_periodic,
                      mat=DEFAULT.mat, rank=DEFAULT.rank, charpoly=DEFAULT.charpoly,
                      rounding=DEFAULT.rounding, grid=DEFAULT.grid)


def _add_source(p):
    p.add_argument("--gen", help="generator spec, e.g. p3, q3, star:3, p3power:2")
    p.add_argument("--graph6", help="graph6 string")
    p.add_argument("--edges", metavar="FILE", help="edge-list file ('n m' then 'u v [w]')")


def _add_model(p):
    p.add_argument("--model", choices=sorted(MODELS), default="adjacency")


def _add_tols(p):
    p.add_argument("--tol-cluster", type=float, default=DEFAULT.cluster)
    p.add_argument("--tol-support", type=float, default=DEFAULT.support)
    p.add_argument("--tol-pst", type=float, default=DEFAULT.pst)
    p.add_argument("--tol-periodic", type=float, default=DEFAULT.periodic)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qwalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="periodicity, bounds and PST report as JSON")
    _add_source(p)
    _add_model(p)
    _add_tols(p)
    p.add_argument("--dump-matrix", action="store_true", help="embed the integer matrix")

    p = sub.add_parser("evolve", help="fidelity curve |U(t)_ab|^2 as CSV")
    _add_source(p)
    _add_model(p)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--tol-cluster", type=float, default=DEFAULT.cluster)

    p = sub.add_parser("search", help="JSONL report per graph6 line on stdin")
    _add_model(p)
    _add_tols(p)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("generate", help="emit a family member")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("param", type=int)
    p.add_argument("--counts", action="store_true", help="print vertex and edge counts")
    p.add_argument("--format", choices=["auto", "graph6", "edges"], default="auto")
    return parser


def cmd_analyze(args, out) -> int:
    g, source = load_graph(args)
    kind = MODELS[args.model]
    report = analyze(g, kind, tolerances(args), source)
    doc = report.to_dict()
    if args.dump_matrix:
        doc["matrix"] = json.loads(build(g, kind).to_json())
    json.dump(doc, out, indent=2)
    out.write("\n")
    return EXIT_OK


def cmd_evolve(args, out) -> int:
    g, _ = load_graph(args)
    if not args.t_max > 0:
        raise UsageError("--t-max must be positive")
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    for v in (args.a, args.b):
        if not 0 <= v < g.n:
            raise UsageError(f"vertex {v} out of range for n={g.n}")
    dec = decompose(build(g, MODELS[args.model]), args.tol_cluster)
    out.write(curve_to_csv(fidelity_curve(dec, args.a, args.b, args.t_max, args.samples)))
    return EXIT_OK


def _search_one(job):
    line, model, tol = job
    try:
        g = gr.parse_graph6(line)
    except gr.GraphError as exc:
        return "skip", f"skipping {line!r}: {exc}"
    try:
        return "ok", analyze(g, model, tol, line.strip()).search_record()
    except CorollaryViolation as exc:
        return "violation", f"{line.strip()}: {exc}"


def cmd_search(args, out, stdin=None, err=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    err = sys.stderr if err is None else err
    kind, tol = MODELS[args.model], tolerances(args)
    jobs = ((ln, kind, tol) for ln in (raw.strip() for raw in stdin) if ln)
    violated = False
    if args.jobs > 1:
        pool = ProcessPoolExecutor(args.jobs)
        results = pool.map(_search_one, jobs, chunksize=64)
    else:
        pool, results = None, map(_search_one, jobs)
    try:
        for status, payload in results:
            if status == "ok":
                out.write(json.dumps(payload) + "\n")
            else:
                violated |= status == "violation"
                print(f"warning: {payload}" if status == "skip" else f"error: {payload}", file=err)
    finally:
        if pool is not None:
            pool.shutdown()
    return EXIT_CONSISTENCY if violated else EXIT_OK


def cmd_generate(args, out) -> int:
    try:
        g = FAMILIES[args.family](args.param)
    except gr.GraphError as exc:
        raise UsageError(str(exc)) from None
    if args.counts:
        out.write(f"n={g.n}\nm={g.m}\n")
        if args.family == "p3power":
            d = 2 * args.param
            out.write(f"d={d}\nformula_n={3 ** (d // 2)}\nformula_m={d * 3 ** (d // 2 - 1)}\n")
        return EXIT_OK
    fmt = args.format
    if fmt == "auto":
        fmt = "graph6" if g.n <= gr.GRAPH6_MAX_N else "edges"
    out.write(gr.to_graph6(g) + "\n" if fmt == "graph6" else gr.to_edge_list(g))
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "evolve": cmd_evolve,
            "search": cmd_search, "generate": cmd_generate}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except CorollaryViolation as exc:
        print(f"error: internal consistency violation: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (UsageError, gr.GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
