import sys
from pathlib import Path

import pytest

project_root = Path(__file__).resolve().parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.complex_core import from_facets  # noqa: E402
from src.graphs import Graph  # noqa: E402


@pytest.fixture
def root_dir() -> Path:
    return project_root


@pytest.fixture
def triangle_boundary():
    return from_facets([(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def path_graph():
    return Graph.from_edges(3, [(1, 2), (2, 3)])


@pytest.fixture
def square_graph():
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def complete4():
    return Graph.from_edges(4, [(u, v) for u in range(1, 5) for v in range(u + 1, 5)])


@pytest.fixture
def three_sun():
    return Graph.from_edges(
        6,
        [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (2, 5), (3, 5), (1, 6), (3, 6)],
    )
