# src/characterize.py
"""Which integer sequences are f-vectors of (pure) quasi-forests, and a forest realizing them.

The test is the suffix-sum positivity of the c-sequence, cross-checked
against positivity (and, for the pure case, monotonicity) of the
b-sequence. A passing sequence is split into (delta, e) sizes and turned
into an explicit forest whose facets are laid out on consecutive labels.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from src.complex_core import (
    Face,
    FVector,
    SimplicialComplex,
    f_vector,
    from_facets,
    is_pure,
)
from src.errors import (
    ConditionViolated,
    ConsistencyError,
    InvalidSequences,
    NotRealizable,
)
from src.transforms import (
    BSequence,
    CSequence,
    b_sequence,
    binomial_difference,
    c_sequence,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeltaESequences:
    """Facet sizes ``deltas`` (s + 1 of them) and leaf intersection sizes ``es`` (s of them)."""

    deltas: tuple[int, ...]
    es: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "deltas", tuple(self.deltas))
        object.__setattr__(self, "es", tuple(self.es))

    @property
    def s(self) -> int:
        return len(self.es)

    @property
    def d(self) -> int:
        return max(self.deltas) if self.deltas else 0

    @property
    def vertex_count(self) -> int:
        return sum(self.deltas) - sum(self.es)

    def validate(self, require_disjoint: bool = False, d: int | None = None) -> None:
        """Raise InvalidSequences naming the first broken requirement.

        The construction only needs sorted, interleaved sequences; disjoint
        delta and e values (the reduced form) are checked on request, and so
        is a top facet size delta_{s+1} equal to an expected ``d``.
        """
        deltas, es = self.deltas, self.es
        if len(deltas) != len(es) + 1:
            raise InvalidSequences(
                "length", f"{len(deltas)} deltas need exactly {len(deltas) - 1} e's, got {len(es)}"
            )
        for j, dl in enumerate(deltas):
            if dl <= 0:
                raise InvalidSequences("non-positive", f"delta_{j + 1} = {dl}", j + 1)
        for j, e in enumerate(es):
            if e < 0:
                raise InvalidSequences("non-positive", f"e_{j + 1} = {e} is negative", j + 1)
        for name, seq in (("delta", deltas), ("e", es)):
            for j in range(1, len(seq)):
                if seq[j - 1] > seq[j]:
                    raise InvalidSequences(
                        "unsorted", f"{name}_{j} = {seq[j - 1]} > {name}_{j + 1} = {seq[j]}", j
                    )
        shared = set(deltas) & set(es)
        if require_disjoint and shared:
            v = min(shared)
            raise InvalidSequences("collision", f"value {v} occurs among both deltas and e's", v)
        for j, (e, dl) in enumerate(zip(es, deltas)):
            if e >= dl:
                raise InvalidSequences("not-interleaved", f"e_{j + 1} = {e} >= delta_{j + 1} = {dl}", j + 1)
        if d is not None and deltas[-1] != d:
            raise InvalidSequences(
                "top-not-d", f"delta_{len(deltas)} = {deltas[-1]} differs from d = {d}", len(deltas)
            )


@dataclass(frozen=True)
class RealizabilityVerdict:
    is_quasi_forest_fvector: bool
    is_pure_quasi_forest_fvector: bool
    c: CSequence
    b: BSequence
    failing_index: int | None = None
    pure_failing_index: int | None = None


@dataclass(frozen=True)
class UnimodalityReport:
    peak_chain: bool
    peak_index: int
    unimodal: bool
    pivot: int | None


def _verdict(f: FVector) -> RealizabilityVerdict:
    c = c_sequence(f)
    b = b_sequence(f)
    d = f.d

    failing = next((k for k in range(1, d + 1) if c.suffix_sum(k) <= 0), None)
    plain = failing is None
    if plain != all(bk > 0 for bk in b):
        raise ConsistencyError(f"suffix sums of c and positivity of b disagree for {f.entries}")

    if failing is not None:
        pure_failing = failing
    else:
        pure_failing = next((i for i in range(1, d) if c[i] > 0), None)
    pure = pure_failing is None
    b_monotone = b[0] > 0 and all(b[k] <= b[k + 1] for k in range(d - 1))
    if pure != b_monotone:
        raise ConsistencyError(f"pure c-conditions and monotone b disagree for {f.entries}")

    logger.debug("verdict for %s: quasi-forest=%s pure=%s", f.entries, plain, pure)
    return RealizabilityVerdict(
        is_quasi_forest_fvector=plain,
        is_pure_quasi_forest_fvector=pure,
        c=c,
        b=b,
        failing_index=failing,
        pure_failing_index=pure_failing,
    )


def is_quasi_forest_fvector(f: FVector) -> RealizabilityVerdict:
    return _verdict(f)


def is_pure_quasi_forest_fvector(f: FVector) -> RealizabilityVerdict:
    return _verdict(f)


def minimal_facet_count(c: CSequence) -> int:
    """Number of facets of the forest built from ``c``; no quasi-forest with this f-vector has fewer."""
    return sum(ci for ci in c if ci > 0)


def decompose(c: CSequence) -> DeltaESequences:
    d = c.d
    for k in range(1, d + 1):
        if c.suffix_sum(k) <= 0:
            raise ConditionViolated(f"sum of c_i for i >= {k} is {c.suffix_sum(k)}", k)
    if sum(c) != 1:
        raise ConditionViolated(f"the c-sequence sums to {sum(c)}, not 1", 0)

    deltas = tuple(i for i, ci in enumerate(c) if ci > 0 for _ in range(ci))
    es = tuple(i for i, ci in enumerate(c) if ci < 0 for _ in range(-ci))
    seq = DeltaESequences(deltas, es)
    try:
        seq.validate(require_disjoint=True, d=d)
    except InvalidSequences as e:
        raise ConsistencyError(f"decomposition of {c.entries} is not reduced: {e}") from e
    return seq


def reduce_collisions(deltas: Iterable[int], es: Iterable[int]) -> DeltaESequences:
    """Cancel equal (delta, e) values pairwise; the signature polynomial is unchanged."""
    dc, ec = Counter(deltas), Counter(es)
    for v in sorted(set(dc) & set(ec)):
        n = min(dc[v], ec[v])
        logger.debug("cancelling %d pair(s) of value %d", n, v)
        dc[v] -= n
        ec[v] -= n
    return DeltaESequences(tuple(sorted(dc.elements())), tuple(sorted(ec.elements())))


def forest_facets(seq: DeltaESequences) -> list[Face]:
    """Facets F_1, ..., F_{s+1} in construction order.

    F_{s+1} is the top block {n-d+1, ..., n}; F_{j-1} takes delta_{j-1} - e_{j-1}
    fresh labels just below min F_j together with the e_{j-1} largest labels of F_j.
    """
    seq.validate()
    n, d, s = seq.vertex_count, seq.d, seq.s
    facets: list[Face] = [tuple(range(n - d + 1, n + 1))]
    for j in range(s, 0, -1):
        current = facets[-1]
        q1 = current[0]
        fresh = seq.deltas[j - 1] - seq.es[j - 1]
        shared = current[len(current) - seq.es[j - 1]:] if seq.es[j - 1] else ()
        facets.append(tuple(range(q1 - fresh, q1)) + shared)
    facets.reverse()
    return facets


def intersection_chain_holds(facets: Sequence[Face]) -> bool:
    """F_j & F_k equals F_j & F_{j+1} for every k > j + 1."""
    sets = [set(f) for f in facets]
    for j in range(len(sets) - 1):
        anchor = sets[j] & sets[j + 1]
        if any(sets[j] & sets[k] != anchor for k in range(j + 2, len(sets))):
            return False
    return True


def construct_forest(seq: DeltaESequences) -> SimplicialComplex:
    facets = forest_facets(seq)
    if not intersection_chain_holds(facets):
        raise ConsistencyError(f"construction broke the intersection chain for {seq}")
    return from_facets(facets)


def realize(f: FVector) -> SimplicialComplex:
    verdict = _verdict(f)
    if not verdict.is_quasi_forest_fvector:
        raise NotRealizable(verdict)
    seq = decompose(verdict.c)
    complex_ = construct_forest(seq)
    got = f_vector(complex_)
    if got != f:
        raise ConsistencyError(f"realization of {f.entries} has f-vector {got.entries}")
    if verdict.is_pure_quasi_forest_fvector and not is_pure(complex_):
        raise ConsistencyError(f"pure sequence {f.entries} produced an impure forest")
    logger.info("realized %s with %d facets on %d vertices", f.entries, len(complex_), complex_.vertex_count)
    return complex_


def _rises_then_falls(seq: Sequence[int], peak: int) -> bool:
    rising = all(seq[i] <= seq[i + 1] for i in range(peak))
    falling = all(seq[i] >= seq[i + 1] for i in range(peak, len(seq) - 1))
    return rising and falling


def check_unimodal(f: FVector) -> UnimodalityReport:
    """Compare (1, f_0, ..., f_{d-1}) against a peak at f_{[(d+1)/2]-1}.

    ``peak_index`` is in f-indexing (-1 is the empty face). ``unimodal`` and
    ``pivot`` describe f_0..f_{d-1} alone; the pivot is the first maximum.
    """
    d = f.d
    peak = (d + 1) // 2 - 1
    chain = _rises_then_falls(f.with_empty_face(), peak + 1)
    entries = f.entries
    first_max = entries.index(max(entries))
    unimodal = _rises_then_falls(entries, first_max)
    return UnimodalityReport(
        peak_chain=chain,
        peak_index=peak,
        unimodal=unimodal,
        pivot=first_max if unimodal else None,
    )


def check_binomial_unimodal(d: int, e: int) -> bool:
    """(1+x)^d - (1+x)^e rises up to degree [(d+1)/2] and falls after it."""
    coefficients = binomial_difference(d, e).padded(d + 1)
    return _rises_then_falls(coefficients, (d + 1) // 2)
