"""Exact maximum-family search, uniqueness enumeration, and the bridge."""

import math

import pytest

from ekr_matchings.core import (
    Matching,
    MatchingFamily,
    Parameters,
    enumerate_matchings,
    intersects,
    phi,
)
from ekr_matchings.ekr_search import (
    STATUS_BUDGET,
    STATUS_PROVEN,
    SearchBudget,
    intersection_graph,
    is_star,
    kneser_complement_bridge,
    max_intersecting,
    verify_theorem,
)


def test_intersection_graph_degrees():
    matchings = enumerate_matchings(Parameters(3, 2))
    adjacency = intersection_graph(matchings)
    assert len(adjacency) == 45
    # {a, b} meets 5 other matchings through a and 5 through b
    assert all(row.bit_count() == 10 for row in adjacency)
    for i, a in enumerate(matchings):
        for j, b in enumerate(matchings):
            expected = i != j and intersects(a, b)
            assert bool(adjacency[i] >> j & 1) == expected


@pytest.mark.parametrize("n,r", [(2, 1), (3, 1), (3, 2), (4, 1)])
def test_max_is_phi_small(n, r):
    params = Parameters(n, r)
    report = max_intersecting(params)
    assert report.status == STATUS_PROVEN
    assert report.max_size == phi(params)
    witness = report.witnesses[0]
    assert len(witness) == report.max_size
    assert witness.is_intersecting


def test_max_perfect_matchings_single():
    # r = n: distinct perfect matchings of K_4 never share an edge
    report = max_intersecting(Parameters(2, 2))
    assert report.max_size == 1 == phi(Parameters(2, 2))


def test_enumeration_n3_all_stars():
    report = verify_theorem(Parameters(3, 2))
    assert report.status == STATUS_PROVEN
    assert report.max_size == 6
    assert report.maximum_family_count == 15
    assert report.maximum_family_count == report.expected_maximum_count
    assert report.all_maximum_are_stars
    assert report.uniqueness_confirmed
    centers = {is_star(fam) for fam in report.witnesses}
    assert len(centers) == 15  # one star per edge of K_6
    assert None not in centers


def test_enumeration_trivial_r1():
    # 1-matchings intersect only when equal: maxima are the singletons
    report = verify_theorem(Parameters(3, 1))
    assert report.max_size == 1
    assert report.maximum_family_count == 15
    assert report.all_maximum_are_stars


def test_budget_exhaustion_reports_partial():
    report = max_intersecting(Parameters(4, 2), SearchBudget(max_nodes=5))
    assert report.status == STATUS_BUDGET
    assert report.max_size >= phi(Parameters(4, 2))  # star seed incumbent
    assert report.witnesses[0].is_intersecting
    assert not report.proven


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(max_seconds=0)


def test_is_star():
    star = MatchingFamily(
        [
            Matching.from_edges([(1, 2), (3, 4)]),
            Matching.from_edges([(1, 2), (5, 6)]),
        ]
    )
    assert is_star(star) == (1, 2)
    triangle = MatchingFamily(
        [
            Matching.from_edges([(1, 2), (3, 4)]),
            Matching.from_edges([(3, 4), (5, 6)]),
            Matching.from_edges([(1, 2), (5, 6)]),
        ]
    )
    assert is_star(triangle) is None
    with pytest.raises(ValueError):
        is_star(MatchingFamily([]))


def test_verify_theorem_rejects_perfect_matchings():
    with pytest.raises(ValueError):
        verify_theorem(Parameters(3, 3))


def test_bridge_n3():
    report = kneser_complement_bridge(Parameters(3, 2))
    assert report.vertex_count == 15
    assert report.independent_set_count == report.chi_value == 45
    assert report.bijection_ok
    assert report.star_sizes_ok
    assert report.strictly_ekr
    assert report.passed


def test_bridge_r1():
    report = kneser_complement_bridge(Parameters(2, 1))
    assert report.independent_set_count == math.comb(4, 2)
    assert report.bijection_ok and report.star_sizes_ok
    assert report.passed
