from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.characterize import (
    DeltaESequences,
    check_binomial_unimodal,
    check_unimodal,
    construct_forest,
    decompose,
    forest_facets,
    intersection_chain_holds,
    is_pure_quasi_forest_fvector,
    is_quasi_forest_fvector,
    minimal_facet_count,
    realize,
    reduce_collisions,
)
from src.complex_core import FVector, f_vector, is_pure
from src.errors import ConditionViolated, InvalidSequences, NotRealizable
from src.recognize import is_forest
from src.transforms import CSequence, c_sequence, facet_signature_polynomial


@pytest.mark.parametrize(
    "f, holds, failing",
    [
        ((3, 2), True, None),
        ((4, 6), False, 1),
        ((4, 4), False, 1),
        ((5, 6, 2), True, None),
        ((4, 4, 1), True, None),
        ((7,), True, None),
    ],
)
def test_quasi_forest_condition(f, holds, failing):
    verdict = is_quasi_forest_fvector(FVector(f))
    assert verdict.is_quasi_forest_fvector is holds
    assert verdict.failing_index == failing


def test_refutation_reports_the_c_sequence():
    verdict = is_quasi_forest_fvector(FVector((4, 6)))
    assert verdict.c.entries == (3, -8, 6)
    assert verdict.b.entries == (-2, 6)


@pytest.mark.parametrize(
    "f, pure, pure_failing",
    [
        ((5, 6, 2), True, None),
        ((4, 4, 1), False, 2),
        ((1,), True, None),
        ((9,), True, None),
        ((4, 4), False, 1),
    ],
)
def test_pure_condition(f, pure, pure_failing):
    verdict = is_pure_quasi_forest_fvector(FVector(f))
    assert verdict.is_pure_quasi_forest_fvector is pure
    assert verdict.pure_failing_index == pure_failing


@pytest.mark.parametrize(
    "c, deltas, es",
    [
        ((0, -1, 2), (2, 2), (1,)),
        ((0, -1, 1, 1), (2, 3), (1,)),
        ((0, 0, 0, 1), (3,), ()),
        ((0, -1, 0, 2), (3, 3), (1,)),
    ],
)
def test_decompose(c, deltas, es):
    seq = decompose(CSequence(c))
    assert seq.deltas == deltas
    assert seq.es == es


def test_decompose_names_the_failing_suffix():
    with pytest.raises(ConditionViolated) as info:
        decompose(CSequence((1, -4, 4)))
    assert info.value.k == 1


@pytest.mark.parametrize(
    "deltas, es, reduced",
    [
        ((2, 3, 3), (1, 3), ((2, 3), (1,))),
        ((3, 3), (1,), ((3, 3), (1,))),
        ((2, 2, 3), (2, 2), ((3,), ())),
    ],
)
def test_reduce_collisions_keeps_the_polynomial(deltas, es, reduced):
    seq = reduce_collisions(deltas, es)
    assert (seq.deltas, seq.es) == reduced
    assert facet_signature_polynomial(seq.deltas, seq.es) == facet_signature_polynomial(deltas, es)


@pytest.mark.parametrize(
    "deltas, es, facets, f",
    [
        ((2, 2), (1,), {(2, 3), (1, 3)}, (3, 2)),
        ((3, 3), (1,), {(3, 4, 5), (1, 2, 5)}, (5, 6, 2)),
        ((2, 3, 3), (1, 2), {(3, 4, 5), (2, 4, 5), (1, 5)}, (5, 6, 2)),
    ],
)
def test_construct_forest(deltas, es, facets, f):
    c = construct_forest(DeltaESequences(deltas, es))
    assert set(c.facets) == facets
    assert f_vector(c).entries == f
    assert is_forest(c).is_forest


def test_forest_facets_follow_construction_order():
    facets = forest_facets(DeltaESequences((2, 3, 3), (1, 2)))
    assert facets == [(1, 5), (2, 4, 5), (3, 4, 5)]
    assert intersection_chain_holds(facets)


def test_intersection_chain_detects_a_break():
    assert not intersection_chain_holds([(1, 2), (2, 3), (1, 4)])


@pytest.mark.parametrize(
    "deltas, es, reason",
    [
        ((2, 3), (), "length"),
        ((0, 2), (1,), "non-positive"),
        ((3, 2), (1,), "unsorted"),
        ((1, 3), (2,), "not-interleaved"),
    ],
)
def test_invalid_sequences(deltas, es, reason):
    with pytest.raises(InvalidSequences) as info:
        construct_forest(DeltaESequences(deltas, es))
    assert info.value.reason == reason


@pytest.mark.parametrize(
    "f, facets",
    [
        ((4, 4, 1), {(2, 3, 4), (1, 4)}),
        ((5, 6, 2), {(3, 4, 5), (1, 2, 5)}),
        ((3, 2), {(2, 3), (1, 3)}),
        ((3,), {(1,), (2,), (3,)}),
    ],
)
def test_realize(f, facets):
    c = realize(FVector(f))
    assert set(c.facets) == facets


def test_realize_refuses_with_the_failing_index():
    with pytest.raises(NotRealizable) as info:
        realize(FVector((4, 4)))
    assert info.value.verdict.failing_index == 1


def test_minimal_facet_count():
    assert minimal_facet_count(c_sequence(FVector((5, 6, 2)))) == 2
    assert minimal_facet_count(c_sequence(FVector((5,)))) == 5


@pytest.mark.parametrize(
    "f, peak",
    [((5, 6, 2), 1), ((3, 2), 0), ((4, 6, 4, 1), 1), ((5, 10, 10, 5, 1), 2)],
)
def test_check_unimodal(f, peak):
    report = check_unimodal(FVector(f))
    assert report.peak_chain
    assert report.peak_index == peak
    assert report.unimodal


def test_check_unimodal_reports_a_dip():
    report = check_unimodal(FVector((5, 2, 4)))
    assert not report.unimodal
    assert report.pivot is None
    assert not report.peak_chain


@pytest.mark.parametrize("d", range(1, 9))
def test_binomial_difference_is_unimodal(d):
    assert all(check_binomial_unimodal(d, e) for e in range(d))


@given(st.integers(min_value=1, max_value=5), st.lists(st.integers(min_value=0, max_value=4), max_size=4))
def test_realize_round_trips_stacked_simplices(d, shared):
    # glue simplices of size d one after another, each sharing e < d vertices with the previous
    es = [min(e, d - 1) for e in shared]
    n = d + sum(d - e for e in es)
    counts = [comb(d, i + 1) + sum(comb(d, i + 1) - comb(e, i + 1) for e in es) for i in range(d)]
    assert counts[0] == n
    f = FVector(tuple(counts))
    c = realize(f)
    assert f_vector(c) == f
    assert is_pure(c)
    assert is_forest(c).is_forest


def test_shared_values_are_only_rejected_on_request():
    seq = DeltaESequences((2, 3, 3), (1, 2))
    seq.validate()
    with pytest.raises(InvalidSequences) as info:
        seq.validate(require_disjoint=True)
    assert info.value.reason == "collision"


def test_top_facet_size_is_checked_against_d():
    seq = DeltaESequences((2, 3), (1,))
    seq.validate(d=3)
    with pytest.raises(InvalidSequences) as info:
        seq.validate(d=4)
    assert info.value.reason == "top-not-d"
    assert info.value.index == 2
