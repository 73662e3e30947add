# src/complex_core.py
"""Simplicial complexes given by their facets, with f- and h-vectors."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from src.config import MAX_FACET_SIZE
from src.errors import BadVertex, EmptyInput, InvalidInput, NotAFacet, ResourceLimit
from src.polynomial import IntPolynomial

logger = logging.getLogger(__name__)

Vertex = int
Face = tuple[Vertex, ...]


def make_face(vertices: Iterable[int]) -> Face:
    """Strictly increasing tuple of the given labels (duplicates collapse)."""
    face = tuple(sorted(set(vertices)))
    for v in face:
        if not isinstance(v, int) or isinstance(v, bool):
            raise BadVertex(f"vertex {v!r} is not an integer")
        if v < 1:
            raise BadVertex(f"vertex label {v} is below 1")
    return face


def facet_sort_key(face: Face) -> tuple:
    return (-len(face), face)


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex stored as its facets in canonical order.

    Facets are sorted by decreasing size, then lexicographically. Build
    instances with ``from_facets``; the constructor only re-checks the
    invariants.
    """

    facets: tuple[Face, ...]

    def __post_init__(self):
        if not self.facets:
            raise EmptyInput("a simplicial complex needs at least one facet")
        for face in self.facets:
            if not face:
                raise EmptyInput("the empty face cannot be a facet")
            if list(face) != sorted(set(face)):
                raise InvalidInput(f"face {face} is not strictly increasing")
            if face[0] < 1:
                raise BadVertex(f"vertex label {face[0]} is below 1")
        sets = [frozenset(f) for f in self.facets]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    raise InvalidInput(
                        f"facet {self.facets[i]} is contained in {self.facets[j]}"
                    )
        object.__setattr__(self, "facets", tuple(sorted(self.facets, key=facet_sort_key)))

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def __contains__(self, face: Sequence[int]) -> bool:
        s = set(face)
        return any(s <= set(f) for f in self.facets)

    def __len__(self) -> int:
        return len(self.facets)


@dataclass(frozen=True)
class FVector:
    """(f_0, ..., f_{d-1}); f_{-1} = 1 is implicit."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise EmptyInput("an f-vector needs at least f_0")
        for i, f in enumerate(entries):
            if not isinstance(f, int) or isinstance(f, bool) or f <= 0:
                raise InvalidInput(f"f_{i} = {f!r} is not a positive integer")
        object.__setattr__(self, "entries", entries)

    @property
    def d(self) -> int:
        return len(self.entries)

    def with_empty_face(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_{d-1})."""
        return (1,) + self.entries

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class HVector:
    """(h_0, ..., h_d); entries may be negative."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) < 2:
            raise InvalidInput("an h-vector has length d + 1 >= 2")

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)


def from_facets(raw_faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Keep the inclusion-maximal members of ``raw_faces``, deduplicated."""
    faces = {make_face(f) for f in raw_faces}
    if not faces:
        raise EmptyInput("no faces given")
    faces.discard(())
    if not faces:
        raise EmptyInput("only the empty face was given")
    # larger faces first: a face can only be swallowed by a strictly larger one
    ordered = sorted(faces, key=facet_sort_key)
    kept: list[frozenset] = []
    maximal: list[Face] = []
    for face in ordered:
        s = frozenset(face)
        if any(s < k for k in kept):
            continue
        kept.append(s)
        maximal.append(face)
    return SimplicialComplex(tuple(maximal))


def dimension(c: SimplicialComplex) -> int:
    return max(len(f) for f in c.facets) - 1


def is_pure(c: SimplicialComplex) -> bool:
    return len({len(f) for f in c.facets}) == 1


def _check_face_guard(c: SimplicialComplex) -> None:
    largest = max(len(f) for f in c.facets)
    if largest > MAX_FACET_SIZE:
        raise ResourceLimit("facet cardinality", largest, MAX_FACET_SIZE)


def faces(c: SimplicialComplex) -> Iterator[Face]:
    """Every non-empty face, by size and then lexicographically."""
    _check_face_guard(c)
    for size in range(1, dimension(c) + 2):
        layer = set()
        for facet in c.facets:
            if len(facet) >= size:
                layer.update(combinations(facet, size))
        yield from sorted(layer)


def f_vector(c: SimplicialComplex) -> FVector:
    _check_face_guard(c)
    counts = []
    for size in range(1, dimension(c) + 2):
        layer = set()
        for facet in c.facets:
            if len(facet) >= size:
                layer.update(combinations(facet, size))
        counts.append(len(layer))
    logger.debug("f-vector of %d facets: %s", len(c.facets), counts)
    return FVector(tuple(counts))


def f_polynomial(c: SimplicialComplex) -> IntPolynomial:
    """sum_{i=0}^{d} f_{i-1} x^i with f_{-1} = 1."""
    return IntPolynomial(f_vector(c).with_empty_face())


def h_vector(f: FVector) -> HVector:
    """Coefficients of sum_i f_{i-1} (x - 1)^{d-i} read from x^d down to x^0."""
    d = f.d
    total = IntPolynomial.zero()
    for i, fi in enumerate(f.with_empty_face()):
        total = total + fi * IntPolynomial.binomial_power(-1, d - i)
    # h_i is the coefficient of x^{d-i}
    return HVector(tuple(total.coefficient(d - i) for i in range(d + 1)))


def subcomplex(c: SimplicialComplex, chosen: Iterable[Sequence[int]]) -> SimplicialComplex:
    """The subcomplex generated by some facets of ``c``."""
    picked = []
    for face in chosen:
        face = make_face(face)
        if face not in c.facets:
            raise NotAFacet(f"{face} is not a facet of the complex")
        picked.append(face)
    return from_facets(picked)


def is_connected(c: SimplicialComplex) -> bool:
    """Facets linked through shared vertices form a single component."""
    remaining = [set(f) for f in c.facets]
    reached = remaining.pop()
    grew = True
    while grew and remaining:
        grew = False
        for f in list(remaining):
            if f & reached:
                reached |= f
                remaining.remove(f)
                grew = True
    return not remaining
