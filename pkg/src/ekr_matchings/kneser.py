"""Kneser graphs on 2-subsets and Hamiltonian-power certificates.

K(m, 2) has the 2-subsets of {1..m} as vertices, adjacent when disjoint.
A cyclic edge order of K_{2n} is exactly a cyclic vertex order of
K(2n, 2), and because every run of up to n-1 consecutive edges is a
matching, that order witnesses the (n-2)-nd power of a Hamiltonian cycle
inside K(2n, 2).  Certificates are just (m, k, order) triples that any
third party can re-verify against the graph.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property

from .baranyai import Permutation, cyclic_order

__all__ = [
    "KneserGraph",
    "HamPowerCertificate",
    "kneser_graph",
    "ham_power_certificate",
    "verify_ham_power",
    "certificate_to_json",
    "certificate_from_json",
]

Vertex = tuple[int, int]


@dataclass(frozen=True)
class KneserGraph:
    """K(m, 2) with bitset adjacency rows aligned to the vertex tuple."""

    m: int
    vertices: tuple[Vertex, ...]
    adjacency: tuple[int, ...]

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def adjacent(self, a: Vertex, b: Vertex) -> bool:
        return bool(self.adjacency[self.index[a]] >> self.index[b] & 1)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def degree(self, v: Vertex) -> int:
        return self.adjacency[self.index[v]].bit_count()


def kneser_graph(m: int) -> KneserGraph:
    """Build K(m, 2): 2-subsets of {1..m}, adjacent iff disjoint."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    vertices = tuple(itertools.combinations(range(1, m + 1), 2))
    full = (1 << len(vertices)) - 1
    containing = [0] * (m + 1)
    for idx, (a, b) in enumerate(vertices):
        bit = 1 << idx
        containing[a] |= bit
        containing[b] |= bit
    adjacency = tuple(full & ~(containing[a] | containing[b]) for a, b in vertices)
    return KneserGraph(m=m, vertices=vertices, adjacency=adjacency)


@dataclass(frozen=True)
class HamPowerCertificate:
    """A cyclic vertex order claimed to realize the k-th Hamiltonian power."""

    m: int
    k: int
    order: tuple[Vertex, ...]


def ham_power_certificate(n: int, sigma: Permutation | None = None) -> HamPowerCertificate:
    """Certificate for the (n-2)-nd Hamiltonian power of K(2n, 2).

    The vertex order is the cyclic edge order of K_{2n} for sigma (identity
    by default).  Requires n >= 3 so that the claimed power is positive.
    """
    if n < 3:
        raise ValueError(f"the power claim needs n >= 3, got {n}")
    if sigma is None:
        sigma = Permutation.identity(2 * n)
    if sigma.size != 2 * n:
        raise ValueError(f"permutation size {sigma.size} does not match 2n = {2 * n}")
    psi = cyclic_order(sigma)
    return HamPowerCertificate(m=2 * n, k=n - 2, order=psi.sequence)


def verify_ham_power(graph: KneserGraph, certificate: HamPowerCertificate) -> bool:
    """True iff all order positions at cyclic distance <= k are adjacent.

    Raises ValueError for malformed certificates: a vertex-count mismatch,
    duplicated or missing vertices, or a nonpositive k.
    """
    if certificate.m != graph.m:
        raise ValueError(f"certificate is for m={certificate.m}, graph has m={graph.m}")
    if certificate.k < 1:
        raise ValueError(f"claimed power must be at least 1, got {certificate.k}")
    if sorted(certificate.order) != sorted(graph.vertices):
        raise ValueError("certificate order must list every vertex exactly once")
    index = graph.index
    sequence = [index[v] for v in certificate.order]
    adjacency = graph.adjacency
    total = len(sequence)
    depth = min(certificate.k, total - 1)
    for i in range(total):
        row = adjacency[sequence[i]]
        for d in range(1, depth + 1):
            if not row >> sequence[(i + d) % total] & 1:
                return False
    return True


def certificate_to_json(certificate: HamPowerCertificate) -> str:
    """Serialize to the interchange schema {"m", "k", "order"} (1-based)."""
    payload = {
        "m": certificate.m,
        "k": certificate.k,
        "order": [[a, b] for a, b in certificate.order],
    }
    return json.dumps(payload, indent=2) + "\n"


def certificate_from_json(text: str) -> HamPowerCertificate:
    """Parse the interchange schema, validating shape but not the claim."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"certificate is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValueError("certificate must be a JSON object")
    missing = {"m", "k", "order"} - payload.keys()
    if missing:
        raise ValueError(f"certificate is missing fields: {sorted(missing)}")
    m, k, order = payload["m"], payload["k"], payload["order"]
    if not isinstance(m, int) or not isinstance(k, int) or not isinstance(order, list):
        raise ValueError("certificate fields have the wrong types")
    vertices = []
    for item in order:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise ValueError(f"order entries must be integer pairs, got {item!r}")
        a, b = item
        if not 1 <= a < b <= m:
            raise ValueError(f"order entry {item!r} is not a canonical 2-subset of 1..{m}")
        vertices.append((a, b))
    return HamPowerCertificate(m=m, k=k, order=tuple(vertices))
