# src/graphs.py
"""Chordal and strongly chordal graphs, and their clique complexes."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import networkx as nx

from src.complex_core import SimplicialComplex, from_facets
from src.config import MAX_CLIQUE_VERTICES, MAX_STRONGLY_CHORDAL_VERTICES
from src.errors import BadVertex, InvalidInput, ResourceLimit

logger = logging.getLogger(__name__)

Cycle = tuple[int, ...]


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the vertices 1..vertex_count."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not _is_int(self.vertex_count):
            raise InvalidInput(f"vertex_count {self.vertex_count!r} is not an integer")
        if self.vertex_count < 0:
            raise InvalidInput("vertex_count must be non-negative")
        normalized = set()
        for edge in self.edges:
            u, v = edge
            if not (_is_int(u) and _is_int(v)):
                raise BadVertex(f"edge ({u!r}, {v!r}) has a non-integer endpoint")
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            u, v = min(u, v), max(u, v)
            if u < 1 or v > self.vertex_count:
                raise InvalidInput(f"edge {u} {v} leaves the vertex range 1..{self.vertex_count}")
            normalized.add((u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidInput(f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """The networkx view; nodes and edges are inserted in sorted order so traversals are stable."""
        h = nx.Graph()
        h.add_nodes_from(self.vertices)
        h.add_edges_from(sorted(self.edges))
        return h

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(self.nx_graph.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return self.nx_graph.has_edge(u, v)


@dataclass(frozen=True)
class ChordalityResult:
    is_chordal: bool
    elimination_ordering: tuple[int, ...] | None = None
    chordless_cycle: Cycle | None = None


@dataclass(frozen=True)
class StrongChordalityResult:
    is_strongly_chordal: bool
    chordal: ChordalityResult
    violating_cycle: Cycle | None = None
    simple_elimination_ordering: tuple[int, ...] | None = None


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of MCS; ties go to the smallest label."""
    weight = {v: 0 for v in g.vertices}
    visited: list[int] = []
    unvisited = set(g.vertices)
    while unvisited:
        z = max(sorted(unvisited), key=lambda v: weight[v])
        unvisited.remove(z)
        visited.append(z)
        for y in g.neighbours(z):
            if y in unvisited:
                weight[y] += 1
    return visited


def is_perfect_elimination_ordering(g: Graph, ordering: Sequence[int]) -> bool:
    position = {v: i for i, v in enumerate(ordering)}
    for v in ordering:
        later = [u for u in g.neighbours(v) if position[u] > position[v]]
        for a, b in combinations(later, 2):
            if not g.has_edge(a, b):
                return False
    return True


def find_chordless_cycle(g: Graph) -> Cycle | None:
    """A chordless cycle of length >= 4, or None when g is chordal.

    Every hole has a vertex v whose two hole-neighbours u, w are not
    adjacent; the rest of the hole is an induced u-w path avoiding the
    other neighbours of v, and a shortest such path closes a hole again.
    """
    h = g.nx_graph
    for v in g.vertices:
        nv = g.neighbours(v)
        for u, w in combinations(sorted(nv), 2):
            if h.has_edge(u, w):
                continue
            allowed = (set(g.vertices) - nv - {v}) | {u, w}
            sub = h.subgraph(allowed)
            if nx.has_path(sub, u, w):
                return canonical_cycle((v, *nx.shortest_path(sub, u, w)))
    return None


def is_chordal(g: Graph) -> ChordalityResult:
    # reversed MCS visit order is a perfect elimination ordering iff g is chordal
    ordering = tuple(reversed(maximum_cardinality_search(g)))
    if is_perfect_elimination_ordering(g, ordering):
        return ChordalityResult(is_chordal=True, elimination_ordering=ordering)
    cycle = find_chordless_cycle(g)
    if cycle is None:
        raise AssertionError("MCS rejected the graph but no chordless cycle exists")
    return ChordalityResult(is_chordal=False, chordless_cycle=cycle)


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Rotate to the least vertex first and orient so the second vertex is below the last."""
    i = cycle.index(min(cycle))
    rotated = tuple(cycle[i:]) + tuple(cycle[:i])
    if len(rotated) > 2 and rotated[1] > rotated[-1]:
        rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
    return rotated


def _cycles(g: Graph, min_length: int) -> Iterator[Cycle]:
    # networkx reports each undirected cycle once; the canonical form dedupes anyway
    seen = set()
    for cycle in nx.simple_cycles(g.nx_graph):
        if len(cycle) < max(min_length, 3):
            continue
        key = canonical_cycle(cycle)
        if key not in seen:
            seen.add(key)
            yield key


def simple_cycles(g: Graph, min_length: int = 3) -> Iterator[Cycle]:
    """Every simple cycle once, in canonical form, in lexicographic order."""
    yield from sorted(_cycles(g, min_length))


def has_odd_chord(g: Graph, cycle: Cycle) -> bool:
    """Some chord joins two cycle vertices at odd distance > 1 along the cycle."""
    n = len(cycle)
    for i, j in combinations(range(n), 2):
        gap = j - i
        distance = min(gap, n - gap)
        if distance > 1 and distance % 2 == 1 and g.has_edge(cycle[i], cycle[j]):
            return True
    return False


def strongly_chordal_by_definition(g: Graph) -> tuple[bool, Cycle | None]:
    """Chordal, and every even cycle of length >= 6 has an odd chord.

    The cycle witness is the first violating cycle networkx reports.
    """
    if g.vertex_count > MAX_STRONGLY_CHORDAL_VERTICES:
        raise ResourceLimit("vertex count", g.vertex_count, MAX_STRONGLY_CHORDAL_VERTICES)
    hole = find_chordless_cycle(g)
    if hole is not None:
        return False, hole
    for cycle in _cycles(g, min_length=6):
        if len(cycle) % 2 == 0 and not has_odd_chord(g, cycle):
            return False, cycle
    return True, None


def simple_elimination_ordering(g: Graph) -> tuple[int, ...] | None:
    """Repeatedly remove a simple vertex (closed neighbourhoods of its neighbours form a chain)."""
    alive = set(g.vertices)
    order: list[int] = []
    while alive:
        for v in sorted(alive):
            closed = [(g.neighbours(u) & alive) | {u} for u in (g.neighbours(v) & alive) | {v}]
            closed.sort(key=len)
            if all(a <= b for a, b in zip(closed, closed[1:])):
                order.append(v)
                alive.remove(v)
                break
        else:
            return None
    return tuple(order)


def is_strongly_chordal(g: Graph) -> StrongChordalityResult:
    if g.vertex_count > MAX_STRONGLY_CHORDAL_VERTICES:
        raise ResourceLimit("vertex count", g.vertex_count, MAX_STRONGLY_CHORDAL_VERTICES)
    chordal = is_chordal(g)
    if not chordal.is_chordal:
        return StrongChordalityResult(
            is_strongly_chordal=False, chordal=chordal, violating_cycle=chordal.chordless_cycle
        )
    ordering = simple_elimination_ordering(g)
    if ordering is not None:
        return StrongChordalityResult(
            is_strongly_chordal=True, chordal=chordal, simple_elimination_ordering=ordering
        )
    holds, cycle = strongly_chordal_by_definition(g)
    if holds:
        logger.warning("no simple elimination ordering, yet every even cycle has an odd chord")
        return StrongChordalityResult(is_strongly_chordal=True, chordal=chordal)
    return StrongChordalityResult(is_strongly_chordal=False, chordal=chordal, violating_cycle=cycle)


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Maximal cliques (networkx runs Bron-Kerbosch with pivoting), sorted."""
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(g.nx_graph))


def clique_complex(g: Graph) -> SimplicialComplex:
    if g.vertex_count > MAX_CLIQUE_VERTICES:
        raise ResourceLimit("vertex count", g.vertex_count, MAX_CLIQUE_VERTICES)
    if g.vertex_count == 0:
        raise InvalidInput("the empty graph has no clique complex")
    return from_facets(maximal_cliques(g))
