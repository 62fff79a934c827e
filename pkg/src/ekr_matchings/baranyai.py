"""Rotational one-factorizations of K_{2n} and their cyclic edge orders.

A permutation sigma of the 2n vertices determines the classical circle
construction: sigma(2n) sits in the middle of a (2n-1)-gon whose corners
are sigma(1), ..., sigma(2n-1).  Rotating the chord pattern gives 2n-1
perfect matchings that partition the edge set.  Part i consists of the
spoke {sigma(i), sigma(2n)} together with the chords
{sigma(i+j), sigma(i-j+2n-1)} for j = 1..n-1, all position arithmetic
taken modulo 2n-1 with representatives 1..2n-1 (never 0).

Each part is kept in a fixed internal order, longest chord first and the
spoke last, and concatenating the parts in order yields a cyclic order on
all n(2n-1) edges.  Runs of at most n-1 consecutive edges in that cyclic
order are always matchings; runs of length n can fail at part boundaries.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import Edge, Matching, make_edge

__all__ = [
    "Permutation",
    "RootedBaranyaiOrder",
    "CyclicOrder",
    "Interval",
    "GoodnessReport",
    "wrap_index",
    "half_order",
    "baranyai_edge",
    "rooted_order",
    "cyclic_order",
    "position_pairs",
    "edge_position",
    "interval",
    "shift",
    "verify_goodness",
    "all_permutations",
    "sample_permutations",
]


def wrap_index(a: int, modulus: int) -> int:
    """Reduce a to the representative in 1..modulus.

    All index arithmetic on the polygon corners goes through this single
    helper so that 0 never appears as an index.
    """
    return (a - 1) % modulus + 1


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1, ..., size}, stored as the tuple of images.

    images[i-1] is the image of i, so calling the permutation uses the
    same 1-based convention as the rest of the package.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise ValueError(f"index {i} out of range 1..{len(self.images)}")
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for position, value in enumerate(self.images, start=1):
            inv[value - 1] = position
        return Permutation(tuple(inv))


def half_order(sigma: Permutation) -> int:
    """The n with sigma acting on 2n points; rejects odd-sized permutations."""
    size = sigma.size
    if size % 2 or size < 2:
        raise ValueError(f"permutation must act on 2n points with n >= 1, got size {size}")
    return size // 2


def baranyai_edge(sigma: Permutation, i: int, j: int) -> Edge:
    """Edge number j of part i of the rotational partition for sigma.

    j = 0 is the spoke {sigma(i), sigma(2n)}; for 1 <= j <= n-1 the edge is
    the chord {sigma(i+j), sigma(i-j+2n-1)} with indices wrapped to 1..2n-1.
    """
    n = half_order(sigma)
    m = 2 * n - 1
    if not 1 <= i <= m:
        raise ValueError(f"part index must be in 1..{m}, got {i}")
    if not 0 <= j <= n - 1:
        raise ValueError(f"edge index must be in 0..{n - 1}, got {j}")
    if j == 0:
        return make_edge(sigma(i), sigma(2 * n))
    return make_edge(sigma(wrap_index(i + j, m)), sigma(wrap_index(i - j + m, m)))


@dataclass(frozen=True)
class RootedBaranyaiOrder:
    """The 2n-1 ordered parts of the partition, with the fixed root vertex."""

    root: int
    parts: tuple[tuple[Edge, ...], ...]

    def part(self, i: int) -> tuple[Edge, ...]:
        """Part i, 1-based, wrapping modulo 2n-1."""
        return self.parts[(i - 1) % len(self.parts)]


def rooted_order(sigma: Permutation) -> RootedBaranyaiOrder:
    """All parts of the rotational partition for sigma.

    Part i is the tuple (e^{n-1}(i), ..., e^1(i), e^0(i)): chords from
    longest rotation offset down to 1, then the spoke through the root.
    """
    n = half_order(sigma)
    parts = tuple(
        tuple(baranyai_edge(sigma, i, j) for j in range(n - 1, -1, -1))
        for i in range(1, 2 * n)
    )
    return RootedBaranyaiOrder(root=sigma(2 * n), parts=parts)


@dataclass(frozen=True)
class CyclicOrder:
    """The concatenation of the ordered parts: a cyclic order on all edges."""

    n: int
    sequence: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.sequence)

    def at(self, position: int) -> Edge:
        """Edge at a 1-based position, wrapping around the cycle."""
        return self.sequence[(position - 1) % len(self.sequence)]


@lru_cache(maxsize=None)
def position_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """0-based image-tuple index pairs feeding each cyclic-order position.

    Entry k says the edge at cyclic position k+1 is {images[p], images[q]}
    for any permutation given as its raw image tuple.  The table depends
    only on n, so it is cached and shared by every sweep over S_{2n}.
    """
    m = 2 * n - 1
    pairs: list[tuple[int, int]] = []
    for i in range(1, m + 1):
        for j in range(n - 1, -1, -1):
            if j == 0:
                pairs.append((i - 1, 2 * n - 1))
            else:
                pairs.append((wrap_index(i + j, m) - 1, wrap_index(i - j + m, m) - 1))
    return tuple(pairs)


def cyclic_order(sigma: Permutation) -> CyclicOrder:
    """The cyclic order on the n(2n-1) edges induced by sigma."""
    n = half_order(sigma)
    images = sigma.images
    sequence = []
    for p, q in position_pairs(n):
        a, b = images[p], images[q]
        sequence.append((a, b) if a < b else (b, a))
    return CyclicOrder(n=n, sequence=tuple(sequence))


def edge_position(sigma: Permutation, edge: tuple[int, int]) -> int:
    """1-based position of an edge in the cyclic order for sigma.

    Every edge of K_{2n} occurs exactly once, so the position is unique.
    Spokes sit at the end of their part; for a chord the part index i
    solves 2i = p + q modulo 2n-1, where p and q are the polygon positions
    of the endpoints (the inverse of 2 modulo 2n-1 is n).
    """
    n = half_order(sigma)
    two_n = 2 * n
    m = two_n - 1
    u, v = make_edge(edge[0], edge[1], two_n)
    p = sigma.images.index(u) + 1
    q = sigma.images.index(v) + 1
    if p == two_n or q == two_n:
        spoke = q if p == two_n else p
        return spoke * n
    i = wrap_index(n * (p + q), m)
    d = (p - i) % m
    j = d if d <= n - 1 else m - d
    return (i - 1) * n + (n - j)


@dataclass(frozen=True)
class Interval:
    """A run of consecutive edges of a cyclic order, with wraparound."""

    start: int
    edges: tuple[Edge, ...]

    @property
    def key(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def is_matching(self) -> bool:
        vertices = [x for edge in self.edges for x in edge]
        return len(set(vertices)) == len(vertices)

    def as_matching(self) -> Matching:
        return Matching.from_edges(self.edges)


def interval(psi: CyclicOrder, i: int, r: int) -> Interval:
    """The r consecutive edges of psi starting at position i (1-based)."""
    total = len(psi.sequence)
    if not 1 <= i <= total:
        raise ValueError(f"start position must be in 1..{total}, got {i}")
    if not 1 <= r <= total:
        raise ValueError(f"interval length must be in 1..{total}, got {r}")
    edges = tuple(psi.sequence[(i - 1 + t) % total] for t in range(r))
    return Interval(start=i, edges=edges)


def shift(pi: Permutation, c: int) -> Permutation:
    """Rotate the polygon positions of pi forward by c, fixing the root.

    The result pi_c satisfies pi_c(i) = pi(i + c) for i in 1..2n-1 (wrapped)
    and pi_c(2n) = pi(2n).  Part i of the shifted permutation equals part
    i + c of the original, including the internal edge order.
    """
    n = half_order(pi)
    m = 2 * n - 1
    if not 1 <= c <= m:
        raise ValueError(f"shift offset must be in 1..{m}, got {c}")
    images = tuple(pi(wrap_index(i + c, m)) for i in range(1, m + 1)) + (pi(2 * n),)
    return Permutation(images)


@dataclass(frozen=True)
class GoodnessReport:
    """Result of checking that short intervals of cyclic orders are matchings."""

    n: int
    r: int
    permutations_checked: int
    intervals_checked: int
    counterexamples: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def verify_goodness(
    n: int,
    sigmas: Iterable[Permutation],
    r: int | None = None,
    max_counterexamples: int = 20,
) -> GoodnessReport:
    """Check every length-r interval of the cyclic order of each sigma.

    r defaults to n-1, the longest length for which every interval is a
    matching.  Counterexamples are recorded as (images, start position)
    pairs, capped at max_counterexamples.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    total = n * (2 * n - 1)
    if r is None:
        r = n - 1 if n > 1 else 1
    if not 1 <= r <= total:
        raise ValueError(f"interval length must be in 1..{total}, got {r}")
    pairs = position_pairs(n)
    counterexamples: list[tuple[tuple[int, ...], int]] = []
    permutations_checked = 0
    intervals_checked = 0
    width = 2 * r
    for sigma in sigmas:
        if sigma.size != 2 * n:
            raise ValueError(f"permutation size {sigma.size} does not match 2n = {2 * n}")
        images = sigma.images
        flat: list[int] = []
        for p, q in pairs:
            flat.append(images[p])
            flat.append(images[q])
        flat.extend(flat[: 2 * (r - 1)])
        permutations_checked += 1
        for start in range(total):
            intervals_checked += 1
            window = flat[2 * start : 2 * start + width]
            if len(set(window)) != width:
                if len(counterexamples) < max_counterexamples:
                    counterexamples.append((images, start + 1))
    return GoodnessReport(
        n=n,
        r=r,
        permutations_checked=permutations_checked,
        intervals_checked=intervals_checked,
        counterexamples=tuple(counterexamples),
    )


def all_permutations(two_n: int) -> Iterable[Permutation]:
    """Every permutation of 1..two_n in lexicographic order."""
    for images in itertools.permutations(range(1, two_n + 1)):
        yield Permutation(images)


def sample_permutations(two_n: int, count: int, seed: int) -> list[Permutation]:
    """Deterministic sample of permutations of 1..two_n from a seeded RNG."""
    rng = random.Random(seed)
    base = list(range(1, two_n + 1))
    out = []
    for _ in range(count):
        rng.shuffle(base)
        out.append(Permutation(tuple(base)))
    return out
