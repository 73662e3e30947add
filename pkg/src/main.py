# src/main.py
import argparse
import json
import logging
import sys
from pathlib import Path

project_root = Path(__file__).resolve().parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.characterize import is_quasi_forest_fvector, realize
from src.complex_core import f_vector, h_vector
from src.complex_utils import complex_to_dot, graph_to_dot
from src.config import RENDER_DIR, VERSION
from src.errors import ConsistencyError, ForestError, NotRealizable
from src.formats import (
    STDIN,
    complex_to_json,
    format_complex,
    format_sequence,
    load_complex,
    load_graph,
    parse_fvector,
)
from src.graphs import clique_complex, is_strongly_chordal
from src.oracle import EnumerationScope, cross_validate
from src.recognize import recognize

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def yes_no(flag) -> str:
    return "yes" if flag else "no"


def print_block(title: str, faces) -> None:
    print(f"{title}:")
    for face in faces:
        print("  " + " ".join(map(str, face)))


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT, level=level, force=True)


def report_render(result) -> None:
    pdf_path, _ = result
    if pdf_path:
        print(f"Rendered: {pdf_path.resolve()}", file=sys.stderr)
    else:
        print("Rendering failed; see the log above.", file=sys.stderr)


def render_name(path: Path) -> str:
    return "stdin" if path == STDIN else path.stem


def print_failure_indices(verdict) -> None:
    if verdict.failing_index is not None:
        print(f"failing-index: {verdict.failing_index}")
    elif verdict.pure_failing_index is not None:
        print(f"pure-failing-index: {verdict.pure_failing_index}")


def cli_check(args) -> int:
    f = parse_fvector(args.fvector)
    verdict = is_quasi_forest_fvector(f)
    print(f"quasi-forest: {yes_no(verdict.is_quasi_forest_fvector)}")
    print(f"pure: {yes_no(verdict.is_pure_quasi_forest_fvector)}")
    print(f"c: {format_sequence(verdict.c)}")
    print(f"b: {format_sequence(verdict.b)}")
    print(f"h: {format_sequence(h_vector(f))}")
    print_failure_indices(verdict)
    return 0 if verdict.is_quasi_forest_fvector else 1


def cli_realize(args) -> int:
    f = parse_fvector(args.fvector)
    try:
        forest = realize(f)
    except NotRealizable as e:
        print("quasi-forest: no")
        print_failure_indices(e.verdict)
        return 1
    if args.json:
        print(json.dumps(complex_to_json(forest), indent=2))
    else:
        sys.stdout.write(format_complex(forest))
    if args.render:
        report_render(complex_to_dot(forest, f"realize_{'_'.join(map(str, f))}", args.render))
    return 0


def cli_recognize(args) -> int:
    c = load_complex(args.file)
    report = recognize(c)
    print(f"pure: {yes_no(report.is_pure)}")
    print(f"connected: {yes_no(report.is_connected)}")
    print(f"quasi-forest: {yes_no(report.is_quasi_forest)}")
    if report.leaf_order is not None:
        # peel order: the first line is a leaf of the whole complex, the last the root
        print_block("leaf-order", reversed(report.leaf_order))
    print(f"forest: {yes_no(report.is_forest)}")
    if report.witness is not None:
        print_block("witness", report.witness)
    print(f"f-vector: {format_sequence(f_vector(c))}")
    if args.render:
        report_render(complex_to_dot(c, render_name(args.file), args.render))
    return 0 if report.is_forest else 1


def cli_graph(args) -> int:
    g = load_graph(args.file)
    strong = is_strongly_chordal(g)
    chordal = strong.chordal
    print(f"chordal: {yes_no(chordal.is_chordal)}")
    if not chordal.is_chordal:
        print(f"chordless-cycle: {' '.join(map(str, chordal.chordless_cycle))}")
    print(f"strongly-chordal: {yes_no(strong.is_strongly_chordal)}")
    if strong.violating_cycle is not None:
        print(f"violating-cycle: {' '.join(map(str, strong.violating_cycle))}")
    c = clique_complex(g)
    print_block("clique-complex", c.facets)
    print(f"f-vector: {format_sequence(f_vector(c))}")
    if args.render:
        report_render(graph_to_dot(g, render_name(args.file), args.render, highlight=strong.violating_cycle))
    return 0 if strong.is_strongly_chordal else 1


def cli_enumerate(args) -> int:
    scope = EnumerationScope(
        max_vertices=args.vertices,
        max_facets=args.facets,
        max_dimension=args.dimension,
        pure=args.pure,
    )
    report = cross_validate(scope, progress=args.progress)
    lines = report.lines()
    for line in lines:
        print(line)
    if args.report:
        args.report.parent.mkdir(parents=True, exist_ok=True)
        args.report.write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"Report saved to: {args.report.resolve()}", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forestvec",
        description="f-vectors of forests and quasi-forests: checks, constructions and recognition.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log to stderr: -v for INFO, -vv for DEBUG.",
    )
    subparsers = parser.add_subparsers(
        dest="action", title="actions", required=True, help="Available actions."
    )

    p_check = subparsers.add_parser(
        "check",
        help="Decide whether a sequence is a (pure) quasi-forest f-vector.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    p_check.add_argument("fvector", type=str, help="Comma-separated f-vector, e.g. 5,6,2.")
    p_check.set_defaults(func=cli_check)

    p_realize = subparsers.add_parser(
        "realize",
        help="Print a forest with the given f-vector.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    p_realize.add_argument("fvector", type=str, help="Comma-separated f-vector, e.g. 4,4,1.")
    p_realize.add_argument(
        "--json", action="store_true", help='Print {"facets": [...]} instead of the text format.'
    )
    p_realize.add_argument(
        "--render",
        type=Path,
        nargs="?",
        const=RENDER_DIR,
        metavar="DIR",
        help=f"Also render a PDF into DIR (default: {RENDER_DIR}).",
    )
    p_realize.set_defaults(func=cli_realize)

    p_recognize = subparsers.add_parser(
        "recognize",
        help="Decide whether a complex is a quasi-forest and a forest.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    p_recognize.add_argument(
        "file",
        type=Path,
        nargs="?",
        default=STDIN,
        help="Complex in text format (one facet per line) or .json; - or nothing reads stdin.",
    )
    p_recognize.add_argument(
        "--render",
        type=Path,
        nargs="?",
        const=RENDER_DIR,
        metavar="DIR",
        help=f"Also render a PDF into DIR (default: {RENDER_DIR}).",
    )
    p_recognize.set_defaults(func=cli_recognize)

    p_graph = subparsers.add_parser(
        "graph",
        help="Chordality, strong chordality and clique complex of a graph.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    p_graph.add_argument(
        "file",
        type=Path,
        nargs="?",
        default=STDIN,
        help="Graph in text format ('n <count>' then 'u v' lines) or .json; - or nothing reads stdin.",
    )
    p_graph.add_argument(
        "--render",
        type=Path,
        nargs="?",
        const=RENDER_DIR,
        metavar="DIR",
        help=f"Also render a PDF into DIR (default: {RENDER_DIR}).",
    )
    p_graph.set_defaults(func=cli_graph)

    p_enumerate = subparsers.add_parser(
        "enumerate",
        help="Cross-validate every property over small exhaustive instances.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    p_enumerate.add_argument("--vertices", type=int, required=True, help="Maximum vertex count (<= 7).")
    p_enumerate.add_argument(
        "--facets", type=int, default=4, help="Maximum facet count (<= 5, default: 4)."
    )
    p_enumerate.add_argument(
        "--dimension", type=int, default=None, help="Maximum dimension of enumerated complexes."
    )
    p_enumerate.add_argument(
        "--pure", action="store_true", help="Enumerate pure quasi-forests only."
    )
    p_enumerate.add_argument(
        "--progress", action="store_true", help="Show progress bars on stderr."
    )
    p_enumerate.add_argument("--report", type=Path, metavar="FILE", help="Also write the report to FILE.")
    p_enumerate.set_defaults(func=cli_enumerate)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else (0 if e.code is None else 2)

    configure_logging(args.verbose)
    logger.debug("action %s with %s", args.action, vars(args))
    try:
        return args.func(args)
    except ConsistencyError as e:
        print(f"Error: internal cross-check failed: {e}", file=sys.stderr)
        return 2
    except (ForestError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
