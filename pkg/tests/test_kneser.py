"""Kneser graphs on 2-subsets and Hamiltonian-power certificates."""

import itertools
import json
import math

import pytest

from ekr_matchings.baranyai import (
    Permutation,
    cyclic_order,
    interval,
    sample_permutations,
)
from ekr_matchings.kneser import (
    HamPowerCertificate,
    certificate_from_json,
    certificate_to_json,
    ham_power_certificate,
    kneser_graph,
    verify_ham_power,
)

from oracles import naive_power_valid


def test_kneser_graph_small_sizes():
    g4 = kneser_graph(4)
    assert len(g4.vertices) == 6
    assert g4.edge_count == 3  # three disjoint pairs
    g5 = kneser_graph(5)
    assert len(g5.vertices) == 10
    assert g5.edge_count == 15  # the Petersen graph
    assert all(g5.degree(v) == 3 for v in g5.vertices)
    g6 = kneser_graph(6)
    assert len(g6.vertices) == 15
    assert all(g6.degree(v) == math.comb(4, 2) for v in g6.vertices)


def test_kneser_adjacency_is_disjointness():
    graph = kneser_graph(6)
    for a, b in itertools.combinations(graph.vertices, 2):
        assert graph.adjacent(a, b) == (not set(a) & set(b))


def test_kneser_graph_rejects_tiny():
    with pytest.raises(ValueError):
        kneser_graph(1)


def test_certificate_matches_cyclic_order():
    certificate = ham_power_certificate(4)
    assert certificate.m == 8
    assert certificate.k == 2
    assert certificate.order == cyclic_order(Permutation.identity(8)).sequence


def test_certificate_needs_n_at_least_3():
    with pytest.raises(ValueError):
        ham_power_certificate(2)


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3)])
def test_power_verifies_up_to_n_minus_2(n, k):
    base = ham_power_certificate(n)
    certificate = HamPowerCertificate(m=base.m, k=k, order=base.order)
    graph = kneser_graph(2 * n)
    assert verify_ham_power(graph, certificate)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_power_fails_at_n_minus_1(n):
    base = ham_power_certificate(n)
    certificate = HamPowerCertificate(m=base.m, k=n - 1, order=base.order)
    graph = kneser_graph(2 * n)
    assert not verify_ham_power(graph, certificate)


def test_random_permutations_also_certify():
    for n in (3, 4):
        graph = kneser_graph(2 * n)
        for sigma in sample_permutations(2 * n, 10, seed=41):
            certificate = ham_power_certificate(n, sigma)
            assert verify_ham_power(graph, certificate)


def test_verifier_agrees_with_naive_check():
    for n in (3, 4):
        graph = kneser_graph(2 * n)
        base = ham_power_certificate(n)
        for k in range(1, n):
            certificate = HamPowerCertificate(m=base.m, k=k, order=base.order)
            assert verify_ham_power(graph, certificate) == naive_power_valid(
                k, certificate.order
            )


def test_power_k_equivalent_to_interval_matchings():
    # Power k holds on the cyclic edge order exactly when every window of
    # k+1 consecutive edges is a matching.
    for n in (3, 4):
        psi = cyclic_order(Permutation.identity(2 * n))
        graph = kneser_graph(2 * n)
        base = ham_power_certificate(n)
        total = len(base.order)
        for k in range(1, n):
            certificate = HamPowerCertificate(m=base.m, k=k, order=base.order)
            windows_ok = all(
                interval(psi, start, k + 1).is_matching()
                for start in range(1, total + 1)
            )
            assert verify_ham_power(graph, certificate) == windows_ok


def test_verifier_rejects_malformed():
    graph = kneser_graph(8)
    good = ham_power_certificate(4)
    with pytest.raises(ValueError):
        verify_ham_power(kneser_graph(6), good)
    with pytest.raises(ValueError):
        verify_ham_power(graph, HamPowerCertificate(m=8, k=0, order=good.order))
    truncated = HamPowerCertificate(m=8, k=2, order=good.order[:-1])
    with pytest.raises(ValueError):
        verify_ham_power(graph, truncated)
    doubled = HamPowerCertificate(m=8, k=2, order=good.order[:-1] + (good.order[0],))
    with pytest.raises(ValueError):
        verify_ham_power(graph, doubled)


def test_json_roundtrip():
    certificate = ham_power_certificate(4)
    text = certificate_to_json(certificate)
    assert certificate_from_json(text) == certificate
    payload = json.loads(text)
    assert set(payload) == {"m", "k", "order"}
    assert payload["order"][0] == [4, 5]


def test_json_parse_rejects_malformed():
    with pytest.raises(ValueError):
        certificate_from_json("not json")
    with pytest.raises(ValueError):
        certificate_from_json(json.dumps([1, 2]))
    with pytest.raises(ValueError):
        certificate_from_json(json.dumps({"m": 8, "k": 2}))
    with pytest.raises(ValueError):
        certificate_from_json(json.dumps({"m": 8, "k": 2, "order": [[1, 1]]}))
    with pytest.raises(ValueError):
        certificate_from_json(json.dumps({"m": 8, "k": 2, "order": [[2, 1]]}))
    with pytest.raises(ValueError):
        certificate_from_json(json.dumps({"m": 8, "k": "2", "order": []}))
