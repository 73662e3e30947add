# src/config.py
from pathlib import Path

VERSION = "1.0.0"

BASE_DIR = Path(__file__).resolve().parent.parent
DATA_DIR = BASE_DIR / "data"
HAND_MADE_DIR = DATA_DIR / "hand_made"

SCHEMAS_DIR = BASE_DIR / "schemas"
OUTPUTS_DIR = BASE_DIR / "outputs"
RENDER_DIR = OUTPUTS_DIR / "renders"

COMPLEX_SCHEMA_PATH = SCHEMAS_DIR / "simplicial_complex_schema.json"
GRAPH_SCHEMA_PATH = SCHEMAS_DIR / "graph_schema.json"

# Face enumeration guard: a facet of this size already has 2^25 faces.
MAX_FACET_SIZE = 25

# Leaf order search and forest check enumerate facet subsets.
MAX_RECOGNITION_FACETS = 20

# Cycle enumeration for the definitional strong chordality check.
MAX_STRONGLY_CHORDAL_VERTICES = 12

MAX_CLIQUE_VERTICES = 25

# Exhaustive oracle scope
MAX_SCOPE_VERTICES = 7
MAX_SCOPE_FACETS = 5
ENUMERATION_ITEM_CAP = 10**7
