"""Position swaps on permutations and the exchange identities that pin a
maximum intersecting family to a single common edge.

Two families of swaps act on the polygon positions of a permutation:
adjacent swaps T_j exchange positions j and j+1 (1 <= j <= 2n-1), and
reflection swaps R_j exchange positions j and 2n-1-j (1 <= j <= n-1).
Both are involutions, they coincide at j = n-1, and reflection swaps
preserve the last part of the rotational partition edge by edge.  For
n+1 <= j <= 2n-3 the adjacent swap factors as a five-fold composition of
swaps with small indices, which is how traces at distant positions get
compared.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Edge, MatchingFamily, Parameters, make_edge, phi
from .baranyai import Permutation, half_order
from .katona import compatible_member_keys

__all__ = [
    "CenterMap",
    "CenterViolation",
    "transpose_adjacent",
    "reflect_swap",
    "composition_identity",
    "construct_interval_permutation",
    "center_map",
]


def _swap_positions(sigma: Permutation, a: int, b: int) -> Permutation:
    values = list(sigma.images)
    values[a - 1], values[b - 1] = values[b - 1], values[a - 1]
    return Permutation(tuple(values))


def transpose_adjacent(sigma: Permutation, j: int) -> Permutation:
    """Swap the values at positions j and j+1 (an involution)."""
    n = half_order(sigma)
    if not 1 <= j <= 2 * n - 1:
        raise ValueError(f"adjacent swap index must be in 1..{2 * n - 1}, got {j}")
    return _swap_positions(sigma, j, j + 1)


def reflect_swap(sigma: Permutation, j: int) -> Permutation:
    """Swap the values at positions j and 2n-1-j (an involution).

    Preserves every edge of the last part of the rotational partition,
    because position j pairs with position 2n-1-j in that part.
    """
    n = half_order(sigma)
    if not 1 <= j <= n - 1:
        raise ValueError(f"reflection swap index must be in 1..{n - 1}, got {j}")
    return _swap_positions(sigma, j, 2 * n - 1 - j)


def composition_identity(sigma: Permutation, j: int) -> bool:
    """Check T_j = R_j' R_{j'+1} T_{j'} R_j' R_{j'+1} with j' = 2n-2-j.

    Valid for n+1 <= j <= 2n-3 (nonempty only when n >= 4).  The five
    small-index swaps on the right are applied innermost first.
    """
    n = half_order(sigma)
    if not n + 1 <= j <= 2 * n - 3:
        raise ValueError(f"composition index must be in {n + 1}..{2 * n - 3}, got {j}")
    jp = 2 * n - 2 - j
    lhs = transpose_adjacent(sigma, j)
    rhs = reflect_swap(sigma, jp + 1)
    rhs = reflect_swap(rhs, jp)
    rhs = transpose_adjacent(rhs, jp)
    rhs = reflect_swap(rhs, jp + 1)
    rhs = reflect_swap(rhs, jp)
    return lhs == rhs


def construct_interval_permutation(
    edges: tuple[tuple[int, int], ...] | list[tuple[int, int]],
    params: Parameters,
) -> Permutation:
    """A permutation whose cyclic order ends with the given edges, in order.

    The input lists r+1 pairwise disjoint edges (the interval read left to
    right); the last one becomes the final spoke {sigma(2n-1), sigma(2n)}.
    Edge number k from the end is realized on positions k and 2n-1-k.
    Leftover vertices go to leftover positions in increasing order, which
    keeps the construction deterministic.  Requires r <= n-2 so that the
    whole interval sits inside the last part.
    """
    n = params.n
    two_n = 2 * n
    sequence = [make_edge(u, v, two_n) for u, v in edges]
    r = len(sequence) - 1
    if r < 0:
        raise ValueError("need at least one edge")
    if r > n - 2:
        raise ValueError(f"interval of length {r + 1} needs r <= n-2, got n={n}")
    used = [x for e in sequence for x in e]
    if len(set(used)) != len(used):
        raise ValueError("edges must form a matching")
    assignment: dict[int, int] = {}
    for k, (x, y) in zip(range(r, -1, -1), sequence):
        if k == 0:
            assignment[two_n - 1] = x
            assignment[two_n] = y
        else:
            assignment[k] = x
            assignment[two_n - 1 - k] = y
    free_positions = sorted(set(range(1, two_n + 1)) - set(assignment))
    free_vertices = sorted(set(range(1, two_n + 1)) - set(used))
    assignment.update(zip(free_positions, free_vertices))
    return Permutation(tuple(assignment[p] for p in range(1, two_n + 1)))


@dataclass(frozen=True)
class CenterViolation:
    """A permutation whose trace is not saturated with a unique common edge."""

    images: tuple[int, ...]
    reason: str
    trace_size: int


@dataclass(frozen=True)
class CenterMap:
    """Center edge per permutation for a maximum intersecting family.

    entries maps every raw image tuple of S_{2n} to the common edge of its
    saturated trace.  violation_count totals permutations that failed
    saturation or had no single common edge; the first few are kept.
    """

    r: int
    entries: dict[tuple[int, ...], Edge]
    violations: tuple[CenterViolation, ...]
    violation_count: int

    @property
    def total(self) -> int:
        return len(self.entries) + self.violation_count

    @property
    def constant_edge(self) -> Edge | None:
        """The single center edge, when the map is constant and violation-free."""
        if self.violation_count or not self.entries:
            return None
        centers = set(self.entries.values())
        if len(centers) == 1:
            return next(iter(centers))
        return None

    @property
    def is_constant(self) -> bool:
        return self.constant_edge is not None


def center_map(
    family: MatchingFamily,
    params: Parameters,
    limit: int = 10,
    max_recorded: int = 10,
) -> CenterMap:
    """Trace every permutation of S_{2n} against a maximum family.

    Each permutation must be saturated (trace size exactly r) with a single
    common edge; the map records that edge.  For a maximum intersecting
    family the map is constant, and for a star its value is the star's
    edge.  Permutations are visited in lexicographic order, so the first
    recorded violation is the lexicographically least offender.
    """
    n, r = params.n, params.r
    two_n = 2 * n
    if two_n > limit:
        raise ValueError(f"2n = {two_n} exceeds the enumeration limit {limit}")
    if r > n - 1:
        raise ValueError(f"tracing needs r <= n-1, got r={r}, n={n}")
    if family.r != r:
        raise ValueError(f"family has r={family.r}, parameters say r={r}")
    expected = phi(params)
    if len(family) != expected:
        raise ValueError(f"family has {len(family)} members, a maximum family has {expected}")
    if not family.is_intersecting:
        raise ValueError("family is not intersecting")
    member_keys = family.member_keys
    entries: dict[tuple[int, ...], Edge] = {}
    violations: list[CenterViolation] = []
    violation_count = 0
    for images in itertools.permutations(range(1, two_n + 1)):
        found = compatible_member_keys(images, n, r, member_keys)
        if len(found) != r:
            violation_count += 1
            if len(violations) < max_recorded:
                violations.append(CenterViolation(images, "unsaturated", len(found)))
            continue
        common = frozenset.intersection(*found)
        if len(common) != 1:
            violation_count += 1
            if len(violations) < max_recorded:
                violations.append(CenterViolation(images, "no common edge", len(found)))
            continue
        entries[images] = next(iter(common))
    return CenterMap(
        r=r,
        entries=entries,
        violations=tuple(violations),
        violation_count=violation_count,
    )
