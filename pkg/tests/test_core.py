"""Counting and canonical-form tests for edges, matchings, and families."""

import math

import pytest
from hypothesis import given, strategies as st

from ekr_matchings.core import (
    Matching,
    MatchingFamily,
    Parameters,
    all_edges,
    chi,
    enumerate_matchings,
    intersects,
    make_edge,
    phi,
    star_family,
)

from oracles import naive_matchings


def test_parameters_validation():
    Parameters(3, 2)
    Parameters(1, 1)
    with pytest.raises(ValueError):
        Parameters(0, 1)
    with pytest.raises(ValueError):
        Parameters(3, 0)
    with pytest.raises(ValueError):
        Parameters(3, 4)


def test_make_edge_canonicalizes():
    assert make_edge(5, 2) == (2, 5)
    assert make_edge(2, 5) == (2, 5)
    with pytest.raises(ValueError):
        make_edge(3, 3)
    with pytest.raises(ValueError):
        make_edge(0, 2)
    with pytest.raises(ValueError):
        make_edge(1, 7, vertex_count=6)


@given(st.integers(1, 50), st.integers(1, 50))
def test_make_edge_sorted_endpoints(u, v):
    if u == v:
        with pytest.raises(ValueError):
            make_edge(u, v)
    else:
        edge = make_edge(u, v)
        assert edge == (min(u, v), max(u, v))


@pytest.mark.parametrize("n", range(1, 6))
def test_all_edges_lex_order_and_count(n):
    edges = all_edges(n)
    assert len(edges) == math.comb(2 * n, 2)
    assert edges == sorted(edges)
    assert len(set(edges)) == len(edges)


def test_matching_rejects_bad_tuples():
    with pytest.raises(ValueError):
        Matching(((2, 1),))
    with pytest.raises(ValueError):
        Matching(((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        Matching(((3, 4), (1, 2)))


def test_matching_from_edges_normalizes():
    m = Matching.from_edges([(4, 3), (2, 1)])
    assert m.edges == ((1, 2), (3, 4))
    assert (1, 2) in m
    assert (1, 3) not in m
    assert len(m) == 2
    assert m.support == frozenset({1, 2, 3, 4})


def test_intersects_requires_shared_edge():
    a = Matching.from_edges([(1, 2), (3, 4)])
    b = Matching.from_edges([(1, 2), (5, 6)])
    c = Matching.from_edges([(1, 3), (2, 4)])
    assert intersects(a, b)
    assert not intersects(a, c)  # shared vertices only


@pytest.mark.parametrize("n", range(1, 5))
def test_enumeration_matches_naive(n):
    for r in range(1, n + 1):
        ours = {m.key for m in enumerate_matchings(Parameters(n, r))}
        reference = set(naive_matchings(2 * n, r))
        assert ours == reference


def test_enumeration_is_sorted_and_unique():
    out = enumerate_matchings(Parameters(3, 2))
    assert out == sorted(out, key=lambda m: m.edges)
    assert len(set(out)) == len(out)


def test_chi_frozen_values():
    assert chi(Parameters(2, 2)) == 3
    assert chi(Parameters(3, 2)) == 45
    assert chi(Parameters(3, 3)) == 15
    assert chi(Parameters(4, 1)) == 28


def test_phi_frozen_values():
    assert phi(Parameters(3, 2)) == 6
    assert phi(Parameters(4, 2)) == 15
    assert phi(Parameters(4, 3)) == 45
    for n in range(1, 6):
        assert phi(Parameters(n, 1)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_chi_identity(n):
    # phi * C(2n, 2) = r * chi: pick a matching by choosing an edge last
    for r in range(1, n + 1):
        params = Parameters(n, r)
        assert phi(params) * math.comb(2 * n, 2) == r * chi(params)


@pytest.mark.parametrize("n,r", [(2, 1), (3, 1), (3, 2), (4, 2)])
def test_chi_equals_enumeration(n, r):
    params = Parameters(n, r)
    assert chi(params) == len(enumerate_matchings(params))


def test_star_family_size_and_membership():
    params = Parameters(3, 2)
    family = star_family(params, (1, 2))
    assert len(family) == phi(params)
    assert all((1, 2) in m for m in family)
    assert family.is_intersecting


def test_star_family_canonicalizes_edge():
    params = Parameters(3, 2)
    assert star_family(params, (2, 1)) == star_family(params, (1, 2))
    with pytest.raises(ValueError):
        star_family(params, (1, 9))


def test_family_dedup_and_size_checks():
    a = Matching.from_edges([(1, 2), (3, 4)])
    b = Matching.from_edges([(3, 4), (1, 2)])
    family = MatchingFamily([a, b])
    assert len(family) == 1
    assert family.r == 2
    with pytest.raises(ValueError):
        MatchingFamily([a, Matching.from_edges([(1, 2)])])
    with pytest.raises(ValueError):
        MatchingFamily([a], r=3)


def test_family_intersecting_detection():
    triangle = MatchingFamily(
        [
            Matching.from_edges([(1, 2), (3, 4)]),
            Matching.from_edges([(3, 4), (5, 6)]),
            Matching.from_edges([(1, 2), (5, 6)]),
        ]
    )
    assert triangle.is_intersecting
    broken = MatchingFamily(
        [
            Matching.from_edges([(1, 2), (3, 4)]),
            Matching.from_edges([(1, 3), (2, 4)]),
        ]
    )
    assert not broken.is_intersecting


@given(st.lists(st.sampled_from(all_edges(3)), min_size=1, max_size=3, unique=True))
def test_from_edges_idempotent(edges):
    support = {v for e in edges for v in e}
    if len(support) != 2 * len(edges):
        with pytest.raises(ValueError):
            Matching.from_edges(edges)
    else:
        m = Matching.from_edges(edges)
        assert Matching.from_edges(m.edges) == m
        assert m.edges == tuple(sorted(edges))
