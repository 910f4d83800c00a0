from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from intfam import Family, degree, find_disjoint_edge, is_cover, restrict, validate_family
from intfam.families import dumps


def test_canonical_form_sorts_and_dedups():
    F = Family(2, [(2, 1), (0, 1), (1, 2)])
    assert F.edges == ((0, 1), (1, 2))
    assert F.n == 3 and F.labels == (1, 2, 3)


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 1, 2)], [(-1, 2)]])
def test_rejects_malformed_edges(bad):
    with pytest.raises(ValueError):
        Family(2, bad)


def test_ground_set_too_small():
    with pytest.raises(ValueError):
        Family(2, [(0, 5)], n=3)


def test_arbitrary_labels_are_densified():
    F = Family.from_labeled(2, [(10, 30), (30, 20)], n=3)
    assert F.labels == (10, 20, 30)
    assert F.edges == ((0, 2), (1, 2))
    assert F.labeled(F.edges[0]) == [10, 30]


def test_frozen():
    F = Family(2, [(0, 1)])
    with pytest.raises(AttributeError):
        F.k = 3


def test_validate_triangle(tri):
    r = validate_family(tri)
    assert r.is_uniform and r.is_intersecting and r.witness is None
    assert (r.max_degree_vertex, r.max_degree) == (0, 2)


def test_validate_disjoint_pair():
    r = validate_family(Family(3, [(0, 1, 2), (3, 4, 5)]))
    assert not r.is_intersecting
    assert r.witness == ((0, 1, 2), (3, 4, 5))


def test_validate_complete_3(k3):
    # brute check of all C(10, 2) pairs, degree C(4, 2)
    assert all(set(a) & set(b) for a, b in combinations(k3.edges, 2))
    r = validate_family(k3)
    assert r.is_intersecting and r.max_degree == 6


def test_degree_examples(k3):
    assert degree(k3, [0]) == 6
    assert degree(k3, [0, 1]) == 3
    assert degree(k3, []) == len(k3) == 10


def test_degree_within_subfamily(k3):
    sub = restrict(k3, [0])
    assert degree(k3, [1], within=sub) == 3
    with pytest.raises(ValueError):
        degree(k3, [0], within=Family(3, [(5, 6, 7)]))


def test_degree_out_of_range(k3):
    with pytest.raises(ValueError):
        degree(k3, [9])


def test_restrict_examples(k3):
    assert len(restrict(k3, [0])) == 6
    assert restrict(k3, [0], [1]).edges == ((0, 2, 3), (0, 2, 4), (0, 3, 4))
    assert restrict(k3) == k3
    with pytest.raises(ValueError):
        restrict(k3, [0], [0])


def test_find_disjoint_edge_examples(k3, tri):
    assert find_disjoint_edge(k3, [0]) == (1, 2, 3)
    assert find_disjoint_edge(tri, [0, 1]) is None
    assert find_disjoint_edge(k3, []) == (0, 1, 2)


families = st.integers(2, 4).flatmap(
    lambda k: st.lists(st.lists(st.integers(0, 7), min_size=k, max_size=k, unique=True), min_size=1, max_size=12).map(
        lambda es: Family(k, es, n=8)
    )
)
vsets = st.sets(st.integers(0, 7), max_size=4)


@given(families, vsets, vsets)
def test_degree_monotone_in_set(F, S, T):
    assert degree(F, S) >= degree(F, S | T)


@given(families, vsets, vsets)
def test_restrict_matches_direct_scan(F, U, V):
    V = V - U
    direct = [e for e in F.edges if U <= set(e) and not V & set(e)]
    assert list(restrict(F, U, V).edges) == direct


@given(families, vsets)
def test_disjoint_edge_absent_iff_cover(F, S):
    assert (find_disjoint_edge(F, S) is None) == is_cover(F, S)


@given(families, st.randoms(use_true_random=False))
def test_canonical_bytes_independent_of_order(F, rnd):
    shuffled = list(F.edges) * 2
    rnd.shuffle(shuffled)
    shuffled = [tuple(rnd.sample(e, len(e))) for e in shuffled]
    assert dumps(Family(F.k, shuffled, n=F.n)) == dumps(F)
