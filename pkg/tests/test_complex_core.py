from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.complex_core import (
    FVector,
    HVector,
    SimplicialComplex,
    dimension,
    f_polynomial,
    f_vector,
    faces,
    from_facets,
    h_vector,
    is_connected,
    is_pure,
    make_face,
    subcomplex,
)
from src.errors import BadVertex, EmptyInput, InvalidInput, NotAFacet, ResourceLimit


@pytest.mark.parametrize(
    "raw, expected",
    [
        ([(1, 2), (2,), (2, 3)], {(1, 2), (2, 3)}),
        ([(1, 2, 3)], {(1, 2, 3)}),
        ([(3, 4, 5), (1, 2, 5), (5,)], {(3, 4, 5), (1, 2, 5)}),
        ([(2, 1), (1, 2), (1,)], {(1, 2)}),
    ],
)
def test_from_facets_keeps_maximal_faces(raw, expected):
    assert set(from_facets(raw).facets) == expected


def test_facets_are_in_canonical_order():
    c = from_facets([(1, 4), (3, 4, 5), (2, 4, 5)])
    assert c.facets == ((2, 4, 5), (3, 4, 5), (1, 4))


def test_bad_inputs_are_rejected():
    with pytest.raises(EmptyInput):
        from_facets([])
    with pytest.raises(EmptyInput):
        from_facets([()])
    with pytest.raises(BadVertex):
        from_facets([(0, 1)])
    with pytest.raises(BadVertex):
        make_face([1, -2])
    with pytest.raises(InvalidInput):
        SimplicialComplex(((1, 2), (1,)))


def test_membership_covers_every_face():
    c = from_facets([(1, 2, 3), (3, 4)])
    assert (1, 3) in c
    assert (4,) in c
    assert (1, 4) not in c
    assert len(c) == 2
    assert c.vertices == (1, 2, 3, 4)


@pytest.mark.parametrize(
    "facets, expected",
    [
        ([(2, 3, 4), (1, 4)], (4, 4, 1)),
        ([(3, 4, 5), (1, 2, 5)], (5, 6, 2)),
        ([(1, 2), (2, 3)], (3, 2)),
        ([(1,), (2,), (3,)], (3,)),
    ],
)
def test_f_vector(facets, expected):
    assert f_vector(from_facets(facets)).entries == expected


@pytest.mark.parametrize("d", [1, 2, 3, 5, 8])
def test_f_vector_of_a_simplex_is_a_binomial_row(d):
    c = from_facets([tuple(range(1, d + 1))])
    assert f_vector(c).entries == tuple(comb(d, i) for i in range(1, d + 1))


def test_facet_guard():
    with pytest.raises(ResourceLimit) as info:
        f_vector(from_facets([tuple(range(1, 27))]))
    assert info.value.cap == 25


@pytest.mark.parametrize(
    "f, expected",
    [
        ((3, 2), (1, 1, 0)),
        ((5, 6, 2), (1, 2, -1, 0)),
        ((4, 6, 4, 1), (1, 0, 0, 0, 0)),
    ],
)
def test_h_vector(f, expected):
    assert h_vector(FVector(f)).entries == expected


def test_fvector_rejects_non_positive_entries():
    with pytest.raises(InvalidInput):
        FVector((4, 0))
    with pytest.raises(EmptyInput):
        FVector(())
    with pytest.raises(InvalidInput):
        HVector((1,))


@pytest.mark.parametrize(
    "facets, dim, pure",
    [
        ([(3, 4, 5), (1, 2, 5)], 2, True),
        ([(2, 3, 4), (1, 4)], 2, False),
        ([(1,)], 0, True),
    ],
)
def test_dimension_and_purity(facets, dim, pure):
    c = from_facets(facets)
    assert dimension(c) == dim
    assert is_pure(c) is pure


def test_faces_are_listed_by_size_then_lexicographically():
    c = from_facets([(1, 2, 3), (3, 4)])
    assert list(faces(c)) == [
        (1,), (2,), (3,), (4,),
        (1, 2), (1, 3), (2, 3), (3, 4),
        (1, 2, 3),
    ]


def test_f_polynomial_prepends_the_empty_face():
    c = from_facets([(3, 4, 5), (1, 2, 5)])
    assert f_polynomial(c).coefficients == (1, 5, 6, 2)


def test_subcomplex():
    c = from_facets([(1, 2, 3), (3, 4), (4, 5)])
    assert subcomplex(c, [(4, 5), (3, 4)]).facets == ((3, 4), (4, 5))
    with pytest.raises(NotAFacet):
        subcomplex(c, [(1, 2)])


def test_connectivity():
    assert is_connected(from_facets([(1, 2), (2, 3), (3, 4)]))
    assert not is_connected(from_facets([(1, 2), (3, 4)]))
    assert is_connected(from_facets([(1,)]))


facet_lists = st.lists(
    st.sets(st.integers(min_value=1, max_value=6), min_size=1, max_size=6).map(sorted),
    min_size=1,
    max_size=5,
)


def naive_f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    counts = [0] * (dimension(c) + 1)
    for k in range(1, len(c.vertices) + 1):
        for subset in combinations(c.vertices, k):
            if subset in c:
                counts[k - 1] += 1
    return tuple(counts)


@given(facet_lists)
def test_from_facets_is_idempotent(raw):
    c = from_facets(raw)
    assert from_facets(c.facets) == c


@given(facet_lists)
def test_f_vector_matches_subset_count(raw):
    c = from_facets(raw)
    assert f_vector(c).entries == naive_f_vector(c)


@given(facet_lists)
def test_low_h_entries_of_a_complex(raw):
    f = f_vector(from_facets(raw))
    h = h_vector(f).entries
    assert h[0] == 1
    assert h[1] == f.entries[0] - f.d
