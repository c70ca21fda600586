from typing import Dict, List, Optional, Sequence, Tuple
import argparse
import json
import logging
import sys

from .core.graph import Graph
from .core.solver import SolverError, four_in_a_tree
from .core.validator import validate_certificate, validate_tree
from .experiments.bench import FAMILIES, run_bench
from .experiments.fuzz import run_fuzz
from .formats.certificate_json import (
    CertificateError, certificate_to_json, load_certificate_payload, read_json, write_json
)
from .formats.dot import coloring_from_certificate, to_dot
from .formats.graph_text import GraphDocument, GraphFormatError, format_graph_text, read_graph_file
from .generators.random_graphs import GeneratorError, gen_connected_triangle_free, gen_triangle_free
from .generators.structures import CubicSizes, SquareSizes, gen_cubic_structure, gen_square_structure
from .oracle.brute_force import OracleError, brute_force_centered_tree, brute_force_tree
from .reduction.centered import ReductionError, build_centered_instance
from .utils.config import get_config
from .utils.logging_setup import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2

INPUT_ERRORS = (
    GraphFormatError, CertificateError, SolverError, OracleError, GeneratorError, ReductionError, ValueError
)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _drawing(g: Graph, data: Optional[Dict]) -> Tuple[Graph, Dict[int, str], List[int]]:
    """Graph, colouring and highlighted vertices for a solve result, or plain g."""
    if not data:
        return g, {}, []
    if data.get("answer") == "tree":
        return g, {}, list(data.get("vertices", []))
    target, certificate = load_certificate_payload(data, g)
    return target, coloring_from_certificate(certificate), []


def cmd_solve(args: argparse.Namespace) -> int:
    doc = read_graph_file(args.file)
    g = doc.graph
    result = four_in_a_tree(g, *args.query)
    payload = result.to_json_dict()

    if args.json:
        _emit(json.dumps(payload, sort_keys=True))
    elif result.found:
        _emit("tree " + " ".join(str(v) for v in result.tree.vertices))
    else:
        _emit(f"no-tree {result.certificate.kind}")
        _emit(json.dumps(certificate_to_json(result.certificate), sort_keys=True))

    if args.dot:
        target, coloring, marked = _drawing(g, payload)
        with open(args.dot, "w") as handle:
            handle.write(to_dot(target, coloring, doc.labels, marked))
    return EXIT_OK if result.found else EXIT_NEGATIVE


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph_file(args.file).graph
    data = read_json(args.certificate)
    if data.get("answer") == "tree":
        violations = validate_tree(g, data.get("vertices", []), data.get("query", []))
    else:
        target, certificate = load_certificate_payload(data, g)
        violations = validate_certificate(target, certificate)
    if not violations:
        _emit("valid")
        return EXIT_OK
    for violation in violations:
        _emit(str(violation))
    return EXIT_NEGATIVE


def cmd_oracle(args: argparse.Namespace) -> int:
    g = read_graph_file(args.file).graph
    if args.centered:
        tree = brute_force_centered_tree(g, args.vertices)
    else:
        tree = brute_force_tree(g, args.vertices)
    if tree is None:
        _emit("none")
        return EXIT_NEGATIVE
    _emit("tree " + " ".join(str(v) for v in tree.vertices))
    return EXIT_OK


def cmd_fuzz(args: argparse.Namespace) -> int:
    config = get_config()
    report = run_fuzz(
        count=args.count,
        min_n=args.min_n,
        max_n=args.max_n,
        p=args.p,
        seed=config.default_seed if args.seed is None else args.seed,
        workers=config.fuzz_workers if args.workers is None else args.workers,
        counterexample_path=args.out,
    )
    if args.table and report.cases:
        _emit(report.to_frame().to_string(index=False))
    _emit(report.summary())
    if report.counterexample_path:
        _emit(f"counterexample written to {report.counterexample_path}")
    return EXIT_NEGATIVE if report.failures else EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    seed = get_config().default_seed if args.seed is None else args.seed
    if args.kind == "rand":
        make = gen_connected_triangle_free if args.connected else gen_triangle_free
        _emit(format_graph_text(make(args.n, args.p, seed)))
        return EXIT_OK
    if args.kind == "square":
        sizes = SquareSizes(a=args.a, s=args.s, r=args.r)
        g, terminals, split = gen_square_structure(sizes, args.inner_p, seed)
    else:
        sizes = CubicSizes(a=args.a, b=args.b, s=args.s, r=args.r)
        g, terminals, split = gen_cubic_structure(sizes, args.inner_p, seed)
    _emit(format_graph_text(GraphDocument(graph=g, terminals=terminals.vertices)))
    if args.cert:
        write_json(args.cert, certificate_to_json(split))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    g = read_graph_file(args.file).graph
    h, terminals = build_centered_instance(g, args.x, args.y)
    _emit(format_graph_text(GraphDocument(graph=h, terminals=terminals)))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    seed = get_config().default_seed if args.seed is None else args.seed
    report = run_bench(args.sizes, seed=seed, edge_factor=args.edge_factor, family=args.family)
    if report.rows:
        _emit(report.to_frame().to_string(index=False))
    if report.exponent is not None:
        _emit(f"exponent {report.exponent:.3f}")
    return EXIT_OK


def cmd_dot(args: argparse.Namespace) -> int:
    doc = read_graph_file(args.file)
    data = read_json(args.result) if args.result else None
    target, coloring, marked = _drawing(doc.graph, data)
    _emit(to_dot(target, coloring, doc.labels, marked))
    if args.html:
        from .visualization.figure import build_figure, write_html
        write_html(build_figure(target, coloring, doc.labels, title=str(args.file), highlight=marked), args.html)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fourtree", description="Four-in-a-tree on triangle-free graphs")
    parser.add_argument("--log-level", default=None, help="Logging level; defaults to FOURTREE_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Find a tree covering four vertices or a certificate")
    solve.add_argument("file", help="Graph file")
    solve.add_argument("query", type=int, nargs=4, metavar="Y", help="Four query vertices")
    solve.add_argument("--json", action="store_true", help="Print the result as JSON")
    solve.add_argument("--dot", default=None, help="Write a DOT drawing of the answer to this path")
    solve.set_defaults(handler=cmd_solve)

    verify = commands.add_parser("verify", help="Check a certificate or a solve result")
    verify.add_argument("file", help="Graph file")
    verify.add_argument("certificate", help="Certificate or result JSON")
    verify.set_defaults(handler=cmd_verify)

    oracle = commands.add_parser("oracle", help="Exhaustive search for a covering induced tree")
    oracle.add_argument("file", help="Graph file")
    oracle.add_argument("vertices", type=int, nargs="+", help="Vertices to cover")
    oracle.add_argument("--centered", action="store_true", help="Require at most one vertex of degree above two")
    oracle.set_defaults(handler=cmd_oracle)

    fuzz = commands.add_parser("fuzz", help="Compare the solver with the oracle on random graphs")
    fuzz.add_argument("--count", type=int, default=100)
    fuzz.add_argument("--min-n", type=int, default=5)
    fuzz.add_argument("--max-n", type=int, default=12)
    fuzz.add_argument("--p", type=float, default=0.3)
    fuzz.add_argument("--seed", type=int, default=None)
    fuzz.add_argument("--workers", type=int, default=None)
    fuzz.add_argument("--out", default=None, help="Where to write a minimized counterexample")
    fuzz.add_argument("--table", action="store_true", help="Print every case")
    fuzz.set_defaults(handler=cmd_fuzz)

    gen = commands.add_parser("gen", help="Generate instances")
    gen.add_argument("kind", choices=["rand", "square", "cubic"])
    gen.add_argument("--n", type=int, default=10)
    gen.add_argument("--p", type=float, default=0.3)
    gen.add_argument("--connected", action="store_true")
    gen.add_argument("--a", type=int, nargs=4, default=[1, 1, 1, 1])
    gen.add_argument("--b", type=int, nargs=4, default=[0, 0, 0, 0])
    gen.add_argument("--s", type=int, nargs="+", default=None)
    gen.add_argument("--r", type=int, default=0)
    gen.add_argument("--inner-p", type=float, default=0.3)
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--cert", default=None, help="Write the structure's certificate JSON here")
    gen.set_defaults(handler=cmd_gen)

    reduce = commands.add_parser("reduce", help="Build the centered-tree instance for a cycle query")
    reduce.add_argument("file", help="Graph file")
    reduce.add_argument("x", type=int)
    reduce.add_argument("y", type=int)
    reduce.set_defaults(handler=cmd_reduce)

    bench = commands.add_parser("bench", help="Time the solver on random bipartite graphs or no-tree structures")
    bench.add_argument("--sizes", type=int, nargs="*", default=[])
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--edge-factor", type=float, default=None)
    bench.add_argument("--family", choices=FAMILIES, default="bipartite")
    bench.set_defaults(handler=cmd_bench)

    dot = commands.add_parser("dot", help="Export a graph, optionally coloured by a result")
    dot.add_argument("file", help="Graph file")
    dot.add_argument("--result", default=None, help="Solve result JSON to colour by")
    dot.add_argument("--html", default=None, help="Also write an interactive HTML figure")
    dot.set_defaults(handler=cmd_dot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    if getattr(args, "kind", None) in ("square", "cubic") and args.s is None:
        args.s = [1] * (4 if args.kind == "square" else 8)
    try:
        return args.handler(args)
    except INPUT_ERRORS as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
