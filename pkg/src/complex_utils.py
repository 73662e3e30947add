# src/complex_utils.py
import logging
import shutil
from pathlib import Path

from graphviz import CalledProcessError, Digraph
from graphviz import Graph as UndirectedDot

from src.complex_core import SimplicialComplex
from src.graphs import Graph

logger = logging.getLogger(__name__)


def _check_target(filename: str, output_dir: Path) -> bool:
    if not filename:
        logger.error("filename cannot be empty for rendering")
        return False
    if not isinstance(output_dir, Path):
        logger.error("output_dir must be a Path object")
        return False
    return True


def _render(dot_graph, filename: str, output_dir: Path) -> tuple[Path | None, None]:
    output_dir.mkdir(parents=True, exist_ok=True)
    pdf_file_path = output_dir / f"{filename}.pdf"

    # a stale PDF from an earlier run must not pass for a fresh one
    if pdf_file_path.exists():
        pdf_file_path.unlink(missing_ok=True)

    try:
        dot_graph.render(
            filename=filename,
            directory=str(output_dir),
            format="pdf",
            cleanup=True,
            quiet=True,
        )
        if pdf_file_path.exists():
            return pdf_file_path, None
        logger.error("PDF file creation failed for '%s' in '%s'", filename, output_dir)
        return None, None

    except CalledProcessError as cpe:
        logger.error("graphviz 'dot' failed while rendering '%s'", filename)
        logger.error("command: %s", " ".join(cpe.cmd) if cpe.cmd else "unknown")
        if shutil.which("dot") is None:
            logger.error("the 'dot' executable (Graphviz) was not found on PATH")
        return None, None

    except Exception as e:
        logger.error("unexpected error rendering '%s': %s", filename, e)
        return None, None


def complex_to_dot(
    c: SimplicialComplex, filename: str, output_dir: Path
) -> tuple[Path | None, None]:
    """
    Renders the vertex/facet incidence diagram of a complex to filename.pdf.

    Vertices are ellipses, facets are boxes labelled with their vertex set,
    and every membership is an edge. The .gv source is not kept.

    Returns:
        tuple: (Path_to_pdf, None) on success, (None, None) on failure.
    """
    if not isinstance(c, SimplicialComplex):
        logger.error("complex_to_dot expects a SimplicialComplex")
        return None, None
    if not _check_target(filename, output_dir):
        return None, None
    return _render(build_complex_dot(c, filename), filename, output_dir)


def build_complex_dot(c: SimplicialComplex, filename: str) -> Digraph:
    dot_graph = Digraph(name=filename, comment=f"Simplicial complex: {filename}")
    dot_graph.attr(rankdir="LR", fontsize="10")
    dot_graph.graph_attr["splines"] = "true"
    dot_graph.graph_attr["nodesep"] = "0.4"
    dot_graph.graph_attr["ranksep"] = "0.9"

    for v in c.vertices:
        dot_graph.node(
            f"v{v}",
            label=str(v),
            shape="ellipse",
            style="filled",
            fillcolor="lightblue",
            fontsize="9",
        )

    for i, facet in enumerate(c.facets):
        label = "{" + ", ".join(map(str, facet)) + "}"
        if len(label) > 28:
            label = label[:25] + "..."
        dot_graph.node(
            f"F{i}",
            label=f"F{i + 1}\n{label}",
            shape="box",
            style="filled",
            fillcolor="lightgray",
            fontsize="9",
        )
        for v in facet:
            dot_graph.edge(f"F{i}", f"v{v}", arrowhead="none")
    return dot_graph


def graph_to_dot(
    g: Graph, filename: str, output_dir: Path, highlight=None
) -> tuple[Path | None, None]:
    """
    Renders an undirected graph to filename.pdf. When ``highlight`` is a
    cycle (sequence of vertices), its vertices and edges are drawn in red.

    Returns:
        tuple: (Path_to_pdf, None) on success, (None, None) on failure.
    """
    if not isinstance(g, Graph):
        logger.error("graph_to_dot expects a Graph")
        return None, None
    if not _check_target(filename, output_dir):
        return None, None
    return _render(build_graph_dot(g, filename, highlight), filename, output_dir)


def build_graph_dot(g: Graph, filename: str, highlight=None) -> UndirectedDot:
    cycle = tuple(highlight or ())
    cycle_vertices = set(cycle)
    cycle_edges = {
        frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))
    } if len(cycle) > 1 else set()

    dot_graph = UndirectedDot(name=filename, comment=f"Graph: {filename}")
    dot_graph.attr(fontsize="10", layout="neato", overlap="false")

    for v in g.vertices:
        attrs = {"shape": "circle", "style": "filled", "fontsize": "9"}
        attrs["fillcolor"] = "salmon" if v in cycle_vertices else "lightblue"
        dot_graph.node(str(v), label=str(v), **attrs)

    for u, v in sorted(g.edges):
        if frozenset((u, v)) in cycle_edges:
            dot_graph.edge(str(u), str(v), color="red", penwidth="2")
        else:
            dot_graph.edge(str(u), str(v))
    return dot_graph
