# src/formats.py
"""Plain-text and JSON forms of f-vectors, complexes and graphs.

Complex text: one facet per line, space-separated positive labels; blank
lines and ``#`` comments are skipped. Graph text: a first line ``n <count>``
followed by one ``u v`` edge per line with u < v. The path ``-`` stands for
standard input.
"""
from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Iterable

from src.complex_core import FVector, SimplicialComplex, from_facets
from src.errors import EmptyInput, InvalidInput, ParseError
from src.graphs import Graph
from src.validation import validate_complex_json, validate_graph_json

logger = logging.getLogger(__name__)


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _int_tokens(line: str, number: int | None) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", number) from None


def parse_fvector(text: str) -> FVector:
    text = text.strip()
    if not text:
        raise EmptyInput("empty f-vector")
    entries = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            entries.append(int(tok))
        except ValueError:
            raise ParseError(f"f-vector entry {tok!r} is not an integer") from None
    return FVector(tuple(entries))


def format_sequence(seq: Iterable[int]) -> str:
    return ",".join(str(x) for x in seq)


def parse_complex(text: str) -> SimplicialComplex:
    faces = []
    for number, line in _content_lines(text):
        labels = _int_tokens(line, number)
        if any(v < 1 for v in labels):
            raise ParseError(f"vertex labels must be positive: {line!r}", number)
        if len(set(labels)) != len(labels):
            raise ParseError(f"facet repeats a vertex: {line!r}", number)
        faces.append(labels)
    if not faces:
        raise EmptyInput("no facets in input")
    return from_facets(faces)


def format_complex(c: SimplicialComplex) -> str:
    return "".join(" ".join(map(str, f)) + "\n" for f in c.facets)


def parse_graph(text: str) -> Graph:
    lines = iter(_content_lines(text))
    header = next(lines, None)
    if header is None:
        raise EmptyInput("no graph header")
    number, line = header
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError(f"expected 'n <count>', got {line!r}", number)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"vertex count {parts[1]!r} is not an integer", number) from None
    if n < 1:
        raise ParseError("a graph needs at least one vertex", number)

    edges = []
    seen = set()
    for number, line in lines:
        pair = _int_tokens(line, number)
        if len(pair) != 2:
            raise ParseError(f"an edge line holds two vertices, got {line!r}", number)
        u, v = pair
        if not 1 <= u < v <= n:
            raise ParseError(f"edge {u} {v} needs 1 <= u < v <= {n}", number)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u} {v}", number)
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"] + [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def complex_to_json(c: SimplicialComplex) -> dict:
    return {"facets": [list(f) for f in c.facets]}


def graph_to_json(g: Graph) -> dict:
    return {"vertex_count": g.vertex_count, "edges": [list(e) for e in sorted(g.edges)]}


STDIN = Path("-")


def _read(path: Path) -> str:
    """Text of ``path``; ``-`` reads standard input."""
    try:
        if path == STDIN:
            return sys.stdin.read()
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from e
    except OSError as e:
        raise InvalidInput(f"cannot read {path}: {e}") from e


def _read_json(path: Path):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno) from e


def load_complex(path: Path) -> SimplicialComplex:
    path = Path(path)
    if path.suffix.lower() == ".json":
        data = _read_json(path)
        ok, message = validate_complex_json(data)
        if not ok:
            raise InvalidInput(f"{path.name}: {message}")
        return from_facets(data["facets"])
    logger.debug("reading complex text from %s", path)
    return parse_complex(_read(path))


def load_graph(path: Path) -> Graph:
    path = Path(path)
    if path.suffix.lower() == ".json":
        data = _read_json(path)
        ok, message = validate_graph_json(data)
        if not ok:
            raise InvalidInput(f"{path.name}: {message}")
        return Graph.from_edges(data["vertex_count"], data["edges"])
    logger.debug("reading graph text from %s", path)
    return parse_graph(_read(path))
