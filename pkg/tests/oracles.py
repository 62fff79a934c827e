"""Slow reference implementations used to freeze expected values.

Everything here recomputes results straight from definitions with
itertools and sets, sharing no logic with the package internals.  The
real implementations must agree with these on every instance small
enough to sweep.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence


def naive_edges(two_n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, two_n + 1), 2))


def naive_matchings(two_n: int, r: int) -> list[frozenset[tuple[int, int]]]:
    """All r-matchings by filtering r-subsets of edges for disjointness."""
    out = []
    for combo in itertools.combinations(naive_edges(two_n), r):
        support = {v for e in combo for v in e}
        if len(support) == 2 * r:
            out.append(frozenset(combo))
    return out


def naive_cyclic_sequence(images: Sequence[int], n: int) -> list[tuple[int, int]]:
    """The full edge order, written out one rotation at a time."""
    m = 2 * n - 1

    def wrap(a: int) -> int:
        return (a - 1) % m + 1

    def at(p: int) -> int:
        return images[p - 1]

    seq: list[tuple[int, int]] = []
    for i in range(1, m + 1):
        for j in range(n - 1, 0, -1):
            u = at(wrap(i + j))
            v = at(wrap(i - j + m))
            seq.append((min(u, v), max(u, v)))
        u, v = at(wrap(i)), images[2 * n - 1]
        seq.append((min(u, v), max(u, v)))
    return seq


def naive_compatible(
    edges: Iterable[tuple[int, int]], images: Sequence[int], n: int
) -> bool:
    """Window scan from the definition: does the set occur as an interval."""
    seq = naive_cyclic_sequence(images, n)
    total = len(seq)
    target = set(edges)
    width = len(target)
    for start in range(total):
        window = {seq[(start + t) % total] for t in range(width)}
        if window == target:
            return True
    return False


def naive_q(edges: Iterable[tuple[int, int]], n: int) -> int:
    """Count compatible permutations by scanning all of S_{2n}."""
    target = tuple(edges)
    count = 0
    for images in itertools.permutations(range(1, 2 * n + 1)):
        if naive_compatible(target, images, n):
            count += 1
    return count


def naive_trace(
    family: Iterable[frozenset[tuple[int, int]]], images: Sequence[int], n: int
) -> list[frozenset[tuple[int, int]]]:
    return [member for member in family if naive_compatible(member, images, n)]


def naive_power_valid(
    k: int, order: Sequence[tuple[int, int]]
) -> bool:
    """Check the cyclic-power property with plain set intersections."""
    total = len(order)
    for idx in range(total):
        for d in range(1, min(k, total - 1) + 1):
            if set(order[idx]) & set(order[(idx + d) % total]):
                return False
    return True
