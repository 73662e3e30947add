import pytest

from src.validation import COMPLEX_SCHEMA, GRAPH_SCHEMA, validate_complex_json, validate_graph_json


def test_schemas_load():
    assert COMPLEX_SCHEMA is not None
    assert GRAPH_SCHEMA is not None


def test_valid_complex():
    assert validate_complex_json({"facets": [[1, 2, 3], [3, 4]]}) == (True, "Valid")


@pytest.mark.parametrize(
    "data, fragment",
    [
        ([[1, 2]], "JSON object"),
        ({"facets": []}, "at 'facets'"),
        ({"facets": [[0, 1]]}, "facets -> 0 -> 0"),
        ({"facets": [[1, 2]], "name": "x"}, "root"),
        ({"facets": [[1, 2, 1]]}, "repeats a vertex"),
        ({"facets": [[]]}, "facets -> 0"),
        ({"facets": [[1, 2.0]]}, "non-integer vertex"),
    ],
)
def test_invalid_complex(data, fragment):
    ok, message = validate_complex_json(data)
    assert not ok
    assert fragment in message


def test_valid_graph():
    assert validate_graph_json({"vertex_count": 3, "edges": [[1, 2], [3, 2]]}) == (True, "Valid")
    assert validate_graph_json({"vertex_count": 1, "edges": []})[0]


@pytest.mark.parametrize(
    "data, fragment",
    [
        ({"vertex_count": 0, "edges": []}, "vertex_count"),
        ({"vertex_count": 3}, "root"),
        ({"vertex_count": 3, "edges": [[1, 2, 3]]}, "edges -> 0"),
        ({"vertex_count": 3, "edges": [[1, 4]]}, "outside 1..3"),
        ({"vertex_count": 3, "edges": [[2, 2]]}, "self-loop"),
        ({"vertex_count": 3, "edges": [[1, 2], [2, 1]]}, "duplicate"),
        ({"vertex_count": 3.0, "edges": [[1, 2]]}, "vertex_count 3.0 is not an integer"),
        ({"vertex_count": 3, "edges": [[1.0, 2]]}, "non-integer endpoint"),
    ],
)
def test_invalid_graph(data, fragment):
    ok, message = validate_graph_json(data)
    assert not ok
    assert fragment in message
