# src/recognize.py
"""Leaves, branches, leaf orders and forests.

A facet F is a leaf when some other facet G (its branch) contains every
intersection H & F with the remaining facets H. Containment is read as
non-strict. Internally facets are bitmasks over the complex's vertex list,
so the subset scans of the forest check stay cheap.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from src.complex_core import (
    Face,
    SimplicialComplex,
    is_connected,
    is_pure,
    make_face,
)
from src.config import MAX_RECOGNITION_FACETS
from src.errors import NotAFacet, NotAPermutation, ResourceLimit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RecognitionReport:
    is_quasi_forest: bool
    leaf_order: tuple[Face, ...] | None = None
    is_forest: bool | None = None
    witness: tuple[Face, ...] | None = None
    is_pure: bool | None = None
    is_connected: bool | None = None

    @property
    def is_quasi_tree(self) -> bool | None:
        if self.is_connected is None:
            return None
        return self.is_quasi_forest and self.is_connected

    @property
    def is_tree(self) -> bool | None:
        if self.is_connected is None or self.is_forest is None:
            return None
        return self.is_forest and self.is_connected


@dataclass(frozen=True)
class LeafOrderCheck:
    valid: bool
    failed_at: int | None
    branches: tuple[Face | None, ...]
    pairs: tuple[tuple[int, int], ...]
    root: Face | None = None

    def signature(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(deltas, es) for Eq. (3) replay; the root facet has no e."""
        deltas = ((len(self.root),) if self.root else ()) + tuple(p[0] for p in self.pairs)
        es = tuple(p[1] for p in self.pairs)
        return deltas, es


def _masks(c: SimplicialComplex) -> list[int]:
    index = {v: i for i, v in enumerate(c.vertices)}
    return [sum(1 << index[v] for v in facet) for facet in c.facets]


def _branch_index(masks: Sequence[int], members: Sequence[int], leaf: int) -> int | None:
    """Index of a branch of ``masks[leaf]`` among ``members``, or None."""
    f = masks[leaf]
    others = [i for i in members if i != leaf]
    if not others:
        return None
    union = 0
    for i in others:
        union |= masks[i] & f
    for g in others:
        if union & ~masks[g] == 0:
            return g
    return None


def _check_facet_cap(c: SimplicialComplex) -> None:
    if len(c.facets) > MAX_RECOGNITION_FACETS:
        raise ResourceLimit("facet count", len(c.facets), MAX_RECOGNITION_FACETS)


def branch_of(c: SimplicialComplex, f: Sequence[int]) -> Face | None:
    face = make_face(f)
    if face not in c.facets:
        raise NotAFacet(f"{face} is not a facet of the complex")
    masks = _masks(c)
    g = _branch_index(masks, range(len(masks)), c.facets.index(face))
    return None if g is None else c.facets[g]


def _peel(masks: list[int]) -> list[int] | None:
    """Facet indices in build order, or None when no leaf order exists.

    Greedy peeling of leaves with backtracking; dead ends are memoised by
    the set of facets still present.
    """
    failed: set[int] = set()

    def search(alive: int) -> list[int] | None:
        members = [i for i in range(len(masks)) if alive >> i & 1]
        if len(members) == 1:
            return members
        if alive in failed:
            return None
        for i in members:
            if _branch_index(masks, members, i) is None:
                continue
            rest = search(alive & ~(1 << i))
            if rest is not None:
                return rest + [i]
        failed.add(alive)
        return None

    return search((1 << len(masks)) - 1)


def leaf_order(c: SimplicialComplex) -> RecognitionReport:
    _check_facet_cap(c)
    order = _peel(_masks(c))
    if order is None:
        logger.debug("no leaf order for %d facets", len(c.facets))
        return RecognitionReport(is_quasi_forest=False)
    result = tuple(c.facets[i] for i in order)
    if not verify_leaf_order(c, result).valid:
        raise AssertionError(f"peeling produced an invalid leaf order {result}")
    return RecognitionReport(is_quasi_forest=True, leaf_order=result)


def _forest_witness(masks: list[int]) -> tuple[int, ...] | None:
    """Smallest facet subset (by size, then lexicographically) without a leaf."""
    s = len(masks)
    for size in range(2, s + 1):
        for members in combinations(range(s), size):
            if all(_branch_index(masks, members, i) is None for i in members):
                return members
    return None


def is_forest(c: SimplicialComplex) -> RecognitionReport:
    _check_facet_cap(c)
    masks = _masks(c)
    witness = _forest_witness(masks)
    base = leaf_order(c)
    if witness is None:
        if not base.is_quasi_forest:
            raise AssertionError("a forest must admit a leaf order")
        return RecognitionReport(
            is_quasi_forest=True, leaf_order=base.leaf_order, is_forest=True
        )
    return RecognitionReport(
        is_quasi_forest=base.is_quasi_forest,
        leaf_order=base.leaf_order,
        is_forest=False,
        witness=tuple(c.facets[i] for i in witness),
    )


def recognize(c: SimplicialComplex) -> RecognitionReport:
    report = is_forest(c)
    return RecognitionReport(
        is_quasi_forest=report.is_quasi_forest,
        leaf_order=report.leaf_order,
        is_forest=report.is_forest,
        witness=report.witness,
        is_pure=is_pure(c),
        is_connected=is_connected(c),
    )


def verify_leaf_order(c: SimplicialComplex, ordering: Sequence[Sequence[int]]) -> LeafOrderCheck:
    order = [make_face(f) for f in ordering]
    if sorted(order) != sorted(c.facets):
        raise NotAPermutation("the ordering is not a permutation of the facets")
    masks = [sum(1 << (v - 1) for v in face) for face in order]
    branches: list[Face | None] = []
    pairs: list[tuple[int, int]] = []
    for j in range(1, len(order)):
        g = _branch_index(masks, range(j + 1), j)
        if g is None:
            return LeafOrderCheck(
                valid=False,
                failed_at=j,
                branches=tuple(branches),
                pairs=tuple(pairs),
                root=order[0],
            )
        branches.append(order[g])
        pairs.append((len(order[j]), len(set(order[j]) & set(order[g]))))
    return LeafOrderCheck(
        valid=True, failed_at=None, branches=tuple(branches), pairs=tuple(pairs), root=order[0]
    )
