"""Vertices, edges, matchings, and exact counting for the complete graph K_{2n}.

Vertices are the 1-based integers 1..2n.  An edge is a canonical pair
(u, v) with u < v, a matching is a sorted tuple of pairwise disjoint
edges, and every count in this module is an exact Python integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Edge = tuple[int, int]

__all__ = [
    "Edge",
    "Parameters",
    "Matching",
    "MatchingFamily",
    "make_edge",
    "all_edges",
    "intersects",
    "enumerate_matchings",
    "chi",
    "phi",
    "star_family",
]


@dataclass(frozen=True)
class Parameters:
    """Problem size: matchings with r edges inside K_{2n}, 1 <= r <= n."""

    n: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not 1 <= self.r <= self.n:
            raise ValueError(f"r must satisfy 1 <= r <= n, got r={self.r}, n={self.n}")

    @property
    def vertex_count(self) -> int:
        return 2 * self.n


def make_edge(u: int, v: int, vertex_count: int | None = None) -> Edge:
    """Canonical form of the edge {u, v}: endpoints in increasing order."""
    if u == v:
        raise ValueError(f"loops are not edges: ({u}, {v})")
    if min(u, v) < 1:
        raise ValueError(f"vertices are 1-based, got ({u}, {v})")
    if vertex_count is not None and max(u, v) > vertex_count:
        raise ValueError(f"vertex out of range 1..{vertex_count}: ({u}, {v})")
    return (u, v) if u < v else (v, u)


def all_edges(n: int) -> list[Edge]:
    """The C(2n, 2) edges of K_{2n} in lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    top = 2 * n
    return [(u, v) for u in range(1, top) for v in range(u + 1, top + 1)]


@dataclass(frozen=True)
class Matching:
    """Pairwise disjoint edges, stored as a lexicographically sorted tuple.

    The raw constructor insists the tuple is already canonical; use
    from_edges() to normalize arbitrary edge input first.
    """

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        previous: Edge | None = None
        for edge in self.edges:
            u, v = edge
            if not 0 < u < v:
                raise ValueError(f"edge {edge} is not canonical")
            if u in seen or v in seen:
                raise ValueError(f"edges are not pairwise disjoint at {edge}")
            if previous is not None and edge <= previous:
                raise ValueError("edges are not sorted")
            seen.add(u)
            seen.add(v)
            previous = edge

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> "Matching":
        return cls(tuple(sorted(make_edge(u, v) for u, v in edges)))

    @cached_property
    def support(self) -> frozenset[int]:
        """Vertices covered by the matching."""
        return frozenset(x for edge in self.edges for x in edge)

    @cached_property
    def key(self) -> frozenset[Edge]:
        """The edge set, hashable, for order-free comparisons."""
        return frozenset(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge: Edge) -> bool:
        return edge in self.key


def intersects(a: Matching, b: Matching) -> bool:
    """True iff the matchings share an edge; a shared vertex is not enough."""
    return not a.key.isdisjoint(b.key)


class MatchingFamily:
    """A deduplicated collection of equal-size matchings in sorted order."""

    def __init__(self, members: Iterable[Matching], r: int | None = None):
        unique = sorted(set(members), key=lambda m: m.edges)
        sizes = {len(m) for m in unique}
        if len(sizes) > 1:
            raise ValueError(f"members have mixed sizes {sorted(sizes)}")
        if sizes:
            inferred = sizes.pop()
            if r is not None and r != inferred:
                raise ValueError(f"family has r={inferred} members, expected r={r}")
            r = inferred
        self.members: tuple[Matching, ...] = tuple(unique)
        self.r = r

    @cached_property
    def member_keys(self) -> frozenset[frozenset[Edge]]:
        return frozenset(m.key for m in self.members)

    @cached_property
    def _member_set(self) -> frozenset[Matching]:
        return frozenset(self.members)

    @cached_property
    def is_intersecting(self) -> bool:
        """True iff every two members share an edge (pairwise check)."""
        members = self.members
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if not intersects(members[i], members[j]):
                    return False
        return True

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Matching]:
        return iter(self.members)

    def __contains__(self, matching: Matching) -> bool:
        return matching in self._member_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatchingFamily):
            return NotImplemented
        return self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"MatchingFamily(r={self.r}, size={len(self.members)})"


def enumerate_matchings(params: Parameters) -> list[Matching]:
    """All r-matchings of K_{2n}, in lexicographic order of their edge tuples.

    The order is deterministic: each matching is emitted as its canonical
    sorted edge tuple, and the list is sorted by those tuples.
    """
    edges = all_edges(params.n)
    r = params.r
    out: list[Matching] = []
    chosen: list[Edge] = []
    used: set[int] = set()

    def extend(start: int) -> None:
        if len(chosen) == r:
            out.append(Matching(tuple(chosen)))
            return
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if u in used or v in used:
                continue
            chosen.append(edges[idx])
            used.add(u)
            used.add(v)
            extend(idx + 1)
            used.discard(u)
            used.discard(v)
            chosen.pop()

    extend(0)
    return out


def chi(params: Parameters) -> int:
    """Number of r-matchings of K_{2n}."""
    n, r = params.n, params.r
    numerator = math.prod(math.comb(2 * n - 2 * t, 2) for t in range(r))
    value, remainder = divmod(numerator, math.factorial(r))
    if remainder:
        raise ArithmeticError(f"matching count is not integral for {params}")
    return value


def phi(params: Parameters) -> int:
    """Number of r-matchings of K_{2n} containing one fixed edge."""
    n, r = params.n, params.r
    numerator = math.prod(math.comb(2 * n - 2 * t, 2) for t in range(1, r))
    value, remainder = divmod(numerator, math.factorial(r - 1))
    if remainder:
        raise ArithmeticError(f"star count is not integral for {params}")
    return value


def star_family(params: Parameters, e: tuple[int, int]) -> MatchingFamily:
    """All r-matchings of K_{2n} containing the edge e.

    The result is intersecting by construction and has phi(n, r) members.
    """
    edge = make_edge(e[0], e[1], params.vertex_count)
    members = [m for m in enumerate_matchings(params) if edge in m.key]
    return MatchingFamily(members, r=params.r)
