"""Shared randomized generators for the differential and property tests.

Everything takes an explicit random.Random so failures replay exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from catchtol.core import Digraph, Graph
from catchtol.reps import (
    Interval,
    PointedInterval,
    Representation,
    ToleranceInterval,
)

DENOMINATORS = (1, 2, 3, 4, 5, 8, 10)


def random_fraction(rng: random.Random, lo: int = -30, hi: int = 30) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(DENOMINATORS))


def random_positive_fraction(rng: random.Random, hi: int = 20) -> Fraction:
    return Fraction(rng.randint(1, hi), rng.choice(DENOMINATORS))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_digraph(rng: random.Random, n: int, p: float = 0.4) -> Digraph:
    arcs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < p
    ]
    return Digraph.from_arcs(n, arcs)


def distinct_fractions(rng: random.Random, count: int, lo: int = -40, hi: int = 40):
    values = set()
    while len(values) < count:
        values.add(random_fraction(rng, lo, hi))
    out = list(values)
    rng.shuffle(out)
    return out


def random_pointed_rep(rng: random.Random, n: int) -> Representation:
    """Pointed intervals with arbitrary interior points (kind mptg)."""
    items = []
    for _ in range(n):
        lo = random_fraction(rng)
        hi = lo + random_positive_fraction(rng)
        t = Fraction(rng.randint(0, 8), 8)
        items.append(PointedInterval(Interval(lo, hi), lo + (hi - lo) * t))
    return Representation("mptg", tuple(items))


def random_central_rep(rng: random.Random, n: int, distinct_centers: bool = True) -> Representation:
    if distinct_centers:
        centers = distinct_fractions(rng, n)
    else:
        centers = [random_fraction(rng) for _ in range(n)]
    items = []
    for c in centers:
        r = random_positive_fraction(rng)
        items.append(PointedInterval(Interval(c - r, c + r), c))
    return Representation("cmptg", tuple(items))


def random_cicd_rep(rng: random.Random, n: int) -> Representation:
    centers = distinct_fractions(rng, n)
    items = []
    for c in centers:
        r = random_positive_fraction(rng)
        items.append(PointedInterval(Interval(c - r, c + r), c))
    return Representation("cicd", tuple(items))


def random_unit_mtg_rep(rng: random.Random, n: int) -> Representation:
    """Equal-length tolerance intervals with tolerances strictly inside (0, h)."""
    h = random_positive_fraction(rng) + 1
    items = []
    for _ in range(n):
        lo = random_fraction(rng)
        tolerance = h * Fraction(rng.randint(1, 15), 16)
        items.append(ToleranceInterval(Interval(lo, lo + h), tolerance))
    return Representation("unit_max_tolerance", tuple(items))


def random_proper_central_rep(rng: random.Random, n: int) -> Representation:
    """Central rep with strictly increasing left AND right endpoints."""
    lo = random_fraction(rng)
    hi = lo + random_positive_fraction(rng)
    items = [(lo, hi)]
    for _ in range(n - 1):
        lo = lo + random_positive_fraction(rng, hi=6)
        hi = max(hi, lo) + random_positive_fraction(rng, hi=6)
        items.append((lo, hi))
    reps = tuple(
        PointedInterval(Interval(a, b), (a + b) / 2) for a, b in items
    )
    return Representation("cmptg", reps)


def random_unit_interval_graph(rng: random.Random, n: int) -> Graph:
    """Intersection graph of unit-length intervals at random distinct centers."""
    centers = distinct_fractions(rng, n, lo=0, hi=3 * n)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if abs(centers[i] - centers[j]) <= 1
    ]
    return Graph.from_edges(n, edges)
