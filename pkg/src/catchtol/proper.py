"""Proper interval (unit interval) graph recognition and unit placements.

Recognition runs three lexicographic breadth-first sweeps, each seeded by
the previous sweep's order, and then checks the final order for the closed
neighborhood condition: every N[v] must occupy consecutive positions.  The
returned ordering is the certificate; callers re-check it in O(n^2).

``unit_positions`` turns such an ordering into strictly increasing rational
centers with edges exactly at center distance <= 1, the core step shared by
the unit-interval constructions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from .core import Graph, InputError, validate_ordering


class NotProperIntervalError(InputError):
    """Raised by constructions that require a proper interval input."""


def _lbfs(neighbor_sets, tie_rank) -> list:
    """Lexicographic BFS; ties broken toward the highest tie_rank."""
    n = len(neighbor_sets)
    labels = [[] for _ in range(n)]
    unvisited = set(range(n))
    order = []
    for step in range(n):
        pick = max(unvisited, key=lambda u: (labels[u], tie_rank[u]))
        unvisited.remove(pick)
        order.append(pick)
        stamp = n - step
        for w in neighbor_sets[pick]:
            if w in unvisited:
                labels[w].append(stamp)
    return order


def neighborhoods_consecutive(g: Graph, ordering: Sequence[int]) -> bool:
    """Closed neighborhood condition: each N[v] is a contiguous block."""
    perm = validate_ordering(g.n, ordering)
    place = {v: k for k, v in enumerate(perm)}
    for v in range(g.n):
        positions = sorted(place[w] for w in g.closed_neighborhood(v))
        if positions[-1] - positions[0] + 1 != len(positions):
            return False
    return True


def proper_interval_ordering(g: Graph) -> Optional[tuple]:
    """An ordering meeting the closed neighborhood condition, or None."""
    n = g.n
    if n == 0:
        return ()
    neighbor_sets = [g.neighbors(v) for v in range(n)]
    order = list(range(n))
    for _ in range(3):
        rank = [0] * n
        for position, v in enumerate(order):
            rank[v] = position
        order = _lbfs(neighbor_sets, rank)
    candidate = tuple(order)
    if neighborhoods_consecutive(g, candidate):
        return candidate
    return None


def proper_interval_ordering_bruteforce(g: Graph) -> Optional[tuple]:
    """Factorial-time oracle used to cross-validate the sweep recognizer."""
    from itertools import permutations

    for perm in permutations(range(g.n)):
        if neighborhoods_consecutive(g, perm):
            return perm
    return None


def unit_positions(g: Graph, ordering: Sequence[int]) -> List[Fraction]:
    """Strictly increasing centers with edge iff center distance <= 1.

    ``ordering`` must satisfy the closed neighborhood condition.  Position
    k of the result belongs to vertex ordering[k].  Edges end strictly
    below distance 1 and non-edges strictly above it, so the placement
    stays valid under either tie convention.
    """
    perm = validate_ordering(g.n, ordering)
    if not neighborhoods_consecutive(g, perm):
        raise NotProperIntervalError(
            "ordering does not satisfy the closed neighborhood condition"
        )
    n = g.n
    centers: List[Fraction] = []
    for j in range(n):
        earlier_neighbors = [
            k for k in range(j) if g.has_edge(perm[k], perm[j])
        ]
        if earlier_neighbors:
            first = earlier_neighbors[0]
            if earlier_neighbors != list(range(first, j)):
                raise NotProperIntervalError(
                    "ordering does not satisfy the closed neighborhood condition"
                )
        if j == 0:
            centers.append(Fraction(0))
            continue
        if not earlier_neighbors:
            # All earlier vertices are non-neighbors: jump past distance 1.
            centers.append(centers[j - 1] + 2)
            continue
        first = earlier_neighbors[0]
        lower = centers[j - 1]
        if first > 0:
            lower = max(lower, centers[first - 1] + 1)
        upper = centers[first] + 1
        if not lower < upper:
            raise NotProperIntervalError(
                "ordering admits no unit placement; the closed neighborhood "
                "condition must have been violated"
            )
        centers.append((lower + upper) / 2)
    return centers
