import json
import logging
from pathlib import Path

from jsonschema import ValidationError, validate

from src.config import COMPLEX_SCHEMA_PATH, GRAPH_SCHEMA_PATH

logger = logging.getLogger(__name__)


def load_schema(path: Path):
    """Loads a JSON schema, or returns None (with an error logged) if it cannot be read."""
    if not path.exists():
        logger.error("schema file not found at %s", path)
        return None
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except Exception as e:
        logger.error("error loading schema %s: %s", path.name, e)
        return None


COMPLEX_SCHEMA = load_schema(COMPLEX_SCHEMA_PATH)
GRAPH_SCHEMA = load_schema(GRAPH_SCHEMA_PATH)


def _is_int(x) -> bool:
    # jsonschema counts 3.0 as an integer
    return isinstance(x, int) and not isinstance(x, bool)


def _schema_error(e: ValidationError) -> str:
    error_path = " -> ".join(map(str, e.path)) if e.path else "root"
    return f"JSON Schema Validation Error at '{error_path}': {e.message}"


def validate_complex_json(complex_json_data):
    """
    Validates a complex given as {"facets": [[...], ...]} against the schema,
    then checks that every vertex is a true integer and no facet repeats one.

    Returns:
        tuple: (bool, str) -- (True, "Valid") or (False, reason).
    """
    if COMPLEX_SCHEMA is None:
        return False, "Schema not loaded. Cannot validate."
    if not isinstance(complex_json_data, dict):
        return False, "Invalid input: complex data must be a JSON object."
    try:
        validate(instance=complex_json_data, schema=COMPLEX_SCHEMA)
    except ValidationError as e:
        return False, _schema_error(e)

    for i, facet in enumerate(complex_json_data["facets"]):
        if not all(_is_int(v) for v in facet):
            return False, f"Facet {i} holds a non-integer vertex: {facet}."
        if len(set(facet)) != len(facet):
            return False, f"Facet {i} repeats a vertex: {facet}."
    return True, "Valid"


def validate_graph_json(graph_json_data):
    """
    Validates a graph given as {"vertex_count": n, "edges": [[u, v], ...]}
    against the schema, then checks integer types, edge endpoints, self-loops
    and duplicates.

    Returns:
        tuple: (bool, str) -- (True, "Valid") or (False, reason).
    """
    if GRAPH_SCHEMA is None:
        return False, "Schema not loaded. Cannot validate."
    if not isinstance(graph_json_data, dict):
        return False, "Invalid input: graph data must be a JSON object."
    try:
        validate(instance=graph_json_data, schema=GRAPH_SCHEMA)
    except ValidationError as e:
        return False, _schema_error(e)

    n = graph_json_data["vertex_count"]
    if not _is_int(n):
        return False, f"vertex_count {n!r} is not an integer."
    seen = set()
    for i, (u, v) in enumerate(graph_json_data["edges"]):
        if not (_is_int(u) and _is_int(v)):
            return False, f"Edge {i} ({u}, {v}) has a non-integer endpoint."
        if u > n or v > n:
            return False, f"Edge {i} ({u}, {v}) uses a vertex outside 1..{n}."
        if u == v:
            return False, f"Edge {i} is a self-loop at vertex {u}."
        key = (min(u, v), max(u, v))
        if key in seen:
            return False, f"Edge {i} ({u}, {v}) is a duplicate."
        seen.add(key)
    return True, "Valid"
