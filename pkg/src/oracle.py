# src/oracle.py
"""Exhaustive small-instance ground truth.

Enumerators stream labeled objects (no isomorphism reduction) in a fixed
order; ``cross_validate`` runs every theorem-level property over them and
collects one counter and at most one counterexample per property.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb
from typing import Callable, Iterable, Iterator

from tqdm import tqdm

from src.characterize import (
    check_unimodal,
    intersection_chain_holds,
    is_quasi_forest_fvector,
    minimal_facet_count,
    decompose,
    forest_facets,
    realize,
)
from src.complex_core import (
    FVector,
    SimplicialComplex,
    dimension,
    f_polynomial,
    f_vector,
    from_facets,
    h_vector,
    is_pure,
)
from src.config import ENUMERATION_ITEM_CAP, MAX_SCOPE_FACETS, MAX_SCOPE_VERTICES
from src.errors import ForestError, InvalidInput, ResourceLimit
from src.graphs import (
    Graph,
    clique_complex,
    is_chordal,
    is_strongly_chordal,
    simple_cycles,
    strongly_chordal_by_definition,
)
from src.recognize import is_forest, leaf_order, verify_leaf_order
from src.transforms import (
    b_from_c,
    b_from_h,
    b_sequence,
    c_from_h,
    c_sequence,
    facet_signature_polynomial,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationScope:
    max_vertices: int
    max_facets: int = MAX_SCOPE_FACETS
    max_dimension: int | None = None
    pure: bool = False

    def __post_init__(self):
        if not 1 <= self.max_vertices <= MAX_SCOPE_VERTICES:
            raise InvalidInput(f"max_vertices must lie in 1..{MAX_SCOPE_VERTICES}, got {self.max_vertices}")
        if not 1 <= self.max_facets <= MAX_SCOPE_FACETS:
            raise InvalidInput(f"max_facets must lie in 1..{MAX_SCOPE_FACETS}, got {self.max_facets}")
        if self.max_dimension is not None and not 0 <= self.max_dimension < self.max_vertices:
            raise InvalidInput(f"max_dimension must lie in 0..{self.max_vertices - 1}")

    @property
    def max_facet_size(self) -> int:
        if self.max_dimension is None:
            return self.max_vertices
        return self.max_dimension + 1


@dataclass
class PropertyResult:
    name: str
    instances: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def record(self, holds: bool, describe: Callable[[], str]) -> None:
        self.instances += 1
        if not holds and self.counterexample is None:
            self.counterexample = describe()

    def line(self) -> str:
        status = "pass" if self.passed else "fail"
        tail = f" {self.counterexample}" if self.counterexample else ""
        return f"{self.name} {self.instances} {status}{tail}"


@dataclass
class ValidationReport:
    scope: EnumerationScope
    properties: list[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(p.passed for p in self.properties)

    def lines(self) -> list[str]:
        return [p.line() for p in self.properties]

    def __getitem__(self, name: str) -> PropertyResult:
        for p in self.properties:
            if p.name == name:
                return p
        raise KeyError(name)


class _Budget:
    def __init__(self, cap: int = ENUMERATION_ITEM_CAP):
        self.cap = cap
        self.used = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.cap:
            raise ResourceLimit("enumerated items", self.used, self.cap)


def _fmt(seq: Iterable[int]) -> str:
    return ",".join(str(x) for x in seq)


def _fmt_complex(c: SimplicialComplex) -> str:
    return "/".join(" ".join(str(v) for v in f) for f in c.facets)


def _fmt_graph(g: Graph) -> str:
    return f"n={g.vertex_count}:" + ";".join(f"{u}-{v}" for u, v in sorted(g.edges))


def enumerate_graphs(scope: EnumerationScope) -> Iterator[Graph]:
    """All labeled graphs on exactly ``scope.max_vertices`` vertices, by edge bitmask."""
    n = scope.max_vertices
    pairs = list(combinations(range(1, n + 1), 2))
    budget = _Budget()
    for mask in range(1 << len(pairs)):
        budget.spend()
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def _to_complex(masks: Iterable[int]) -> SimplicialComplex:
    return from_facets([v + 1 for v in range(mask.bit_length()) if mask >> v & 1] for mask in masks)


def _contiguous(masks: tuple[int, ...]) -> bool:
    union = 0
    for m in masks:
        union |= m
    return union & (union + 1) == 0


def _facet_candidates(scope: EnumerationScope) -> list[int]:
    top = scope.max_facet_size
    return [m for m in range(1, 1 << scope.max_vertices) if bin(m).count("1") <= top]


def enumerate_quasi_forests(scope: EnumerationScope) -> Iterator[SimplicialComplex]:
    """Quasi-forests on {1..m}, m <= max_vertices, grown one leaf at a time.

    Level k holds every facet set with k facets admitting a leaf order; a
    new facet is a leaf when the union of its intersections with the
    present facets sits inside one of them.
    """
    candidates = _facet_candidates(scope)
    budget = _Budget()
    level = sorted((m,) for m in candidates)
    for k in range(1, scope.max_facets + 1):
        logger.debug("quasi-forest level %d: %d facet sets", k, len(level))
        for masks in level:
            if _contiguous(masks):
                yield _to_complex(masks)
        if k == scope.max_facets:
            break
        nxt: set[tuple[int, ...]] = set()
        for masks in level:
            size = bin(masks[0]).count("1")
            for cand in candidates:
                if scope.pure and bin(cand).count("1") != size:
                    continue
                if any(cand & m == cand or cand & m == m for m in masks):
                    continue
                union = 0
                for m in masks:
                    union |= cand & m
                if any(union & ~m == 0 for m in masks):
                    nxt.add(tuple(sorted(masks + (cand,))))
        budget.spend(len(nxt))
        level = sorted(nxt)


def enumerate_complexes(scope: EnumerationScope) -> Iterator[SimplicialComplex]:
    """Every complex on {1..m}, m <= max_vertices, with at most max_facets facets."""
    candidates = _facet_candidates(scope)
    budget = _Budget()
    for k in range(1, scope.max_facets + 1):
        for masks in combinations(candidates, k):
            budget.spend()
            if scope.pure and len({bin(m).count("1") for m in masks}) > 1:
                continue
            if any(a & b == a for a, b in permutations(masks, 2)):
                continue
            if _contiguous(masks):
                yield _to_complex(masks)


def chordal_by_definition(g: Graph) -> bool:
    """Every simple cycle of length >= 4 has a chord."""
    for cycle in simple_cycles(g, min_length=4):
        n = len(cycle)
        if not any(
            g.has_edge(cycle[i], cycle[j])
            for i, j in combinations(range(n), 2)
            if 1 < j - i < n - 1
        ):
            return False
    return True


def leaf_order_by_permutations(c: SimplicialComplex) -> bool:
    return any(verify_leaf_order(c, order).valid for order in permutations(c.facets))


def candidate_fvectors(scope: EnumerationScope) -> Iterator[FVector]:
    """Positive sequences bounded so that no f-vector of an in-scope complex is missed.

    A complex with at most K facets of size at most d has f_i <= K * C(d, i+1).
    """
    n, cap = scope.max_vertices, scope.max_facets
    top = scope.max_facet_size
    budget = _Budget()
    for d in range(1, top + 1):
        for f0 in range(d, min(n, cap * d) + 1):
            ranges = [range(1, min(comb(f0, i + 1), cap * comb(d, i + 1)) + 1) for i in range(1, d)]
            for rest in product(*ranges):
                budget.spend()
                yield FVector((f0,) + rest)


def _quasi_forest_properties(scope, report, complexes, bar) -> tuple[set, set, set]:
    replay = PropertyResult("sydney_replay")
    interleave = PropertyResult("leaf_order_interleaving")
    forest_implies = PropertyResult("forest_is_quasi_forest")
    unimodal = PropertyResult("pure_fvector_unimodal")
    osaka_on_complex = PropertyResult("recognized_fvector_passes_condition")
    qf, pure_qf, forests = set(), set(), set()
    for c in complexes:
        bar.update(1)
        f = f_vector(c)
        order = leaf_order(c)
        if not order.is_quasi_forest:
            replay.record(False, lambda: f"enumerated {_fmt_complex(c)} has no leaf order")
            continue
        check = verify_leaf_order(c, order.leaf_order)
        deltas, es = check.signature()
        replay.record(
            facet_signature_polynomial(deltas, es) == f_polynomial(c),
            lambda: _fmt_complex(c),
        )
        sd, se = sorted(deltas), sorted(es)
        interleave.record(all(e < dl for e, dl in zip(se, sd)), lambda: _fmt_complex(c))
        verdict = is_quasi_forest_fvector(f)
        pure = is_pure(c)
        osaka_on_complex.record(
            verdict.is_quasi_forest_fvector and (verdict.is_pure_quasi_forest_fvector or not pure),
            lambda: f"{_fmt_complex(c)} f={_fmt(f)}",
        )
        qf.add(f.entries)
        if pure:
            pure_qf.add(f.entries)
            u = check_unimodal(f)
            unimodal.record(u.peak_chain, lambda: f"{_fmt_complex(c)} f={_fmt(f)}")
        forest = is_forest(c)
        if forest.is_forest:
            forest_implies.record(forest.is_quasi_forest, lambda: _fmt_complex(c))
            forests.add(f.entries)
    report.properties.extend([replay, interleave, osaka_on_complex, unimodal, forest_implies])
    return qf, pure_qf, forests


def _sequence_properties(scope, report, bar) -> tuple[set, set]:
    bridge = PropertyResult("condition_iii_iv_agree")
    remark = PropertyResult("remark_identities")
    roundtrip = PropertyResult("realize_round_trip")
    pure_pipeline = PropertyResult("pure_realization_is_pure")
    expected_qf, expected_pure = set(), set()
    for f in candidate_fvectors(scope):
        c = c_sequence(f)
        b = b_sequence(f)
        verdict = is_quasi_forest_fvector(f)
        bridge.record(
            b_from_c(c) == b and verdict.is_quasi_forest_fvector == all(x > 0 for x in b),
            lambda: _fmt(f),
        )
        h = h_vector(f)
        remark.record(c_from_h(h) == c and b_from_h(h) == b and sum(c) == 1, lambda: _fmt(f))
        bar.update(1)
        if not verdict.is_quasi_forest_fvector or minimal_facet_count(c) > scope.max_facets:
            continue
        expected_qf.add(f.entries)
        try:
            seq = decompose(c)
            built = realize(f)
        except ForestError as e:
            roundtrip.record(False, lambda: f"{_fmt(f)} ({e})")
            continue
        roundtrip.record(
            f_vector(built) == f
            and intersection_chain_holds(forest_facets(seq))
            and built.vertex_count == seq.vertex_count
            and dimension(built) == f.d - 1
            and bool(is_forest(built).is_forest),
            lambda: _fmt(f),
        )
        if verdict.is_pure_quasi_forest_fvector:
            expected_pure.add(f.entries)
            pure_pipeline.record(
                all(len(facet) == f.d for facet in built.facets), lambda: _fmt(f)
            )
    report.properties.extend([bridge, remark, roundtrip, pure_pipeline])
    return expected_qf, expected_pure


def _set_property(name: str, got: set, expected: set) -> PropertyResult:
    result = PropertyResult(name, instances=len(got | expected))
    diff = sorted(got ^ expected)
    if diff:
        side = "missing" if diff[0] in expected else "extra"
        result.counterexample = f"{side} {_fmt(diff[0])}"
    return result


def _graph_properties(scope, report, bar) -> None:
    chordal_def = PropertyResult("chordal_matches_definition")
    strong_def = PropertyResult("strongly_chordal_matches_definition")
    chordal_qf = PropertyResult("chordal_clique_complex_is_quasi_forest")
    strong_forest = PropertyResult("strongly_chordal_clique_complex_is_forest")
    non_chordal = PropertyResult("non_chordal_refuted_by_recognizer")
    permutation = PropertyResult("leaf_order_matches_permutations")
    for n in range(1, scope.max_vertices + 1):
        for g in enumerate_graphs(EnumerationScope(n, scope.max_facets)):
            chordal = is_chordal(g)
            chordal_def.record(chordal.is_chordal == chordal_by_definition(g), lambda: _fmt_graph(g))
            strong = is_strongly_chordal(g)
            strong_def.record(
                strong.is_strongly_chordal == strongly_chordal_by_definition(g)[0],
                lambda: _fmt_graph(g),
            )
            c = clique_complex(g)
            bar.update(1)
            order = leaf_order(c)
            # the permutation brute force is factorial in the facet count
            if len(c.facets) <= scope.max_facets:
                permutation.record(
                    order.is_quasi_forest == leaf_order_by_permutations(c), lambda: _fmt_graph(g)
                )
            if chordal.is_chordal:
                chordal_qf.record(order.is_quasi_forest, lambda: _fmt_graph(g))
                if strong.is_strongly_chordal:
                    strong_forest.record(bool(is_forest(c).is_forest), lambda: _fmt_graph(g))
            else:
                holds = not order.is_quasi_forest or is_quasi_forest_fvector(f_vector(c)).is_quasi_forest_fvector
                non_chordal.record(holds, lambda: _fmt_graph(g))
    report.properties.extend([chordal_def, strong_def, chordal_qf, strong_forest, non_chordal, permutation])


def cross_validate(scope: EnumerationScope, progress: bool = False) -> ValidationReport:
    """Run the property matrix over everything enumerable within ``scope``."""
    report = ValidationReport(scope)
    logger.info("cross-validating scope %s", scope)

    with tqdm(desc="quasi-forests", unit="complex", disable=not progress) as bar:
        qf, pure_qf, forests = _quasi_forest_properties(
            scope, report, enumerate_quasi_forests(scope), bar
        )
    with tqdm(desc="f-vector candidates", unit="seq", disable=not progress) as bar:
        expected_qf, expected_pure = _sequence_properties(scope, report, bar)

    if scope.pure:
        report.properties.append(_set_property("pure_fvectors_match_condition", pure_qf, expected_pure))
    else:
        report.properties.append(_set_property("quasi_forest_fvectors_match_condition", qf, expected_qf))
        report.properties.append(_set_property("pure_fvectors_match_condition", pure_qf, expected_pure))
        report.properties.append(_set_property("forest_fvectors_match_quasi_forest", forests, qf))
        with tqdm(desc="graphs", unit="graph", disable=not progress) as bar:
            _graph_properties(scope, report, bar)

    failed = [p.name for p in report.properties if not p.passed]
    if failed:
        logger.warning("properties with counterexamples: %s", ", ".join(failed))
    return report
