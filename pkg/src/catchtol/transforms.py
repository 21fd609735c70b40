"""Constructive conversions between interval representations.

Each transform emits a representation that realizes the same graph or
digraph as its input; the test suite drives every one of them through
randomized differential checks against :func:`catchtol.reps.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .conditions import check_condition, check_optimized, validate_labeling
from .core import Digraph, Graph, InputError, validate_ordering
from .proper import NotProperIntervalError, proper_interval_ordering, unit_positions
from .reps import (
    Interval,
    PointedInterval,
    Representation,
    ToleranceInterval,
    realize,
    tied_center_pairs,
)


@dataclass(frozen=True)
class LabeledGraph:
    """Graph with an ordering and strictly increasing positive labels."""

    graph: Graph
    ordering: tuple  # vertex at each position
    labels: tuple  # Fraction at each position, increasing

    def __post_init__(self):
        perm = validate_ordering(self.graph.n, self.ordering)
        if len(self.labels) != self.graph.n:
            raise InputError(
                f"got {len(self.labels)} labels for {self.graph.n} vertices"
            )
        for k, value in enumerate(self.labels):
            if not value > 0:
                raise InputError(f"label at position {k} must be positive, got {value}")
            if k and not self.labels[k - 1] < value:
                raise InputError(
                    f"labels must increase along the ordering; positions {k - 1},{k} "
                    f"carry {self.labels[k - 1]} >= {value}"
                )
        object.__setattr__(self, "ordering", perm)


def _require_kind(rep: Representation, kind: str, op: str) -> None:
    if rep.kind != kind:
        raise InputError(f"{op} expects a {kind} representation, got {rep.kind}")


def cmptg_to_umtg(rep: Representation) -> Representation:
    """Convert a central pointed representation to a unit max-tolerance one.

    All output intervals share the same length; the tolerance of a vertex
    shrinks as its input interval grows.
    """
    _require_kind(rep, "cmptg", "cmptg_to_umtg")
    if rep.n == 0:
        return Representation("unit_max_tolerance", ())
    common = max(rep.lengths()) + 1
    items = []
    for i in range(rep.n):
        interval = rep.interval(i)
        c = interval.center
        items.append(
            ToleranceInterval(
                Interval(c, c + common / 2), (common - interval.length) / 2
            )
        )
    return Representation("unit_max_tolerance", tuple(items))


def umtg_to_cmptg(rep: Representation) -> Representation:
    """Convert a unit max-tolerance representation to a central pointed one.

    Requires every tolerance strictly below the common length; a tolerance
    equal to the length would produce a degenerate zero-length interval and
    one above it an inverted interval, so both are rejected.
    """
    _require_kind(rep, "unit_max_tolerance", "umtg_to_cmptg")
    if rep.n == 0:
        return Representation("cmptg", ())
    common = rep.interval(0).length
    items = []
    for i in range(rep.n):
        item = rep.items[i]
        if not item.tolerance < common:
            raise InputError(
                f"item {i}: tolerance {item.tolerance} must be strictly below the "
                f"common length {common}; the converted interval would be degenerate"
            )
        reach = common - item.tolerance
        lo = item.interval.lo
        items.append(PointedInterval(Interval(lo - reach, lo + reach), lo))
    return Representation("cmptg", tuple(items))


def _containment_pair(rep: Representation):
    """First pair (i, j) where interval i properly contains interval j."""
    for i in range(rep.n):
        a = rep.interval(i)
        for j in range(rep.n):
            if i == j:
                continue
            b = rep.interval(j)
            if a.lo <= b.lo and b.hi <= a.hi and (a.lo, a.hi) != (b.lo, b.hi):
                return (i, j)
    return None


def _require_proper(rep: Representation, op: str) -> None:
    pair = _containment_pair(rep)
    if pair is not None:
        raise InputError(
            f"{op} needs a proper representation, but interval {pair[0]} "
            f"properly contains interval {pair[1]}"
        )


def pcmptg_to_ucmptg(rep: Representation) -> Representation:
    """Equalize the interval lengths of a proper central representation.

    The output keeps the left-endpoint order and realizes the same graph;
    every interval gets the length of the leftmost input interval.  Inputs
    that are already unit come back unchanged.
    """
    _require_kind(rep, "cmptg", "pcmptg_to_ucmptg")
    _require_proper(rep, "pcmptg_to_ucmptg")
    if rep.n == 0:
        return rep
    lengths = rep.lengths()
    if len(set(lengths)) == 1:
        return rep
    graph = realize(rep)
    order = tuple(
        sorted(
            range(rep.n),
            key=lambda v: (rep.interval(v).center, rep.interval(v).lo, v),
        )
    )
    centers = unit_positions(graph, order)
    leftmost = min(range(rep.n), key=lambda v: (rep.interval(v).lo, v))
    half = rep.interval(leftmost).length / 2
    items = [None] * rep.n
    for position, v in enumerate(order):
        c = centers[position] * half
        items[v] = PointedInterval(Interval(c - half, c + half), c)
    return Representation("cmptg", tuple(items))


def proper_to_ucmptg(g: Graph) -> Representation:
    """Unit central representation of a proper interval graph.

    The recognizer supplies a closed-neighborhood-consecutive ordering; a
    left-to-right sweep then solves the center placement with radius-1
    intervals.  Raises NotProperIntervalError when no ordering exists.
    """
    ordering = proper_interval_ordering(g)
    if ordering is None:
        raise NotProperIntervalError(
            f"graph on {g.n} vertices is not a proper interval graph"
        )
    centers = unit_positions(g, ordering)
    items = [None] * g.n
    for position, v in enumerate(ordering):
        c = centers[position]
        items[v] = PointedInterval(Interval(c - 1, c + 1), c)
    return Representation("cmptg", tuple(items))


def pcmptg_to_50mtg(rep: Representation) -> Representation:
    """Reuse the intervals of a proper central representation with half-length
    tolerances."""
    _require_kind(rep, "cmptg", "pcmptg_to_50mtg")
    _require_proper(rep, "pcmptg_to_50mtg")
    items = tuple(
        ToleranceInterval(rep.interval(i), rep.interval(i).length / 2)
        for i in range(rep.n)
    )
    return Representation("fifty_mtg", items)


def _position_extents(adjacent, n: int):
    """(min, max) positions reached from each position, self included."""
    extents = []
    for i in range(n):
        positions = [i] + [j for j in range(n) if j != i and adjacent(i, j)]
        extents.append((min(positions), max(positions)))
    return extents


def _safe_radius(values: Sequence[Fraction], k: int) -> Fraction:
    """Positive radius below half the gap to any other value."""
    others = [abs(values[k] - x) for i, x in enumerate(values) if i != k]
    if not others:
        return Fraction(1)
    return min(others) / 2


def labeled_to_cmptg(lg: LabeledGraph) -> Representation:
    """Build a central representation from labels satisfying the spread
    conditions along a four-point ordering.

    Radii are the larger of the label distances to the extreme neighbors;
    isolated vertices get half the minimum gap to any other label so their
    intervals stay positive without creating adjacencies.
    """
    g, perm, x = lg.graph, lg.ordering, lg.labels
    n = g.n
    four_point = check_condition(g, perm, "mptg_4point")
    if not four_point.ok:
        raise InputError(
            f"ordering violates the four-point condition at positions "
            f"{four_point.violation}"
        )
    extents = _position_extents(lambda i, j: g.has_edge(perm[i], perm[j]), n)
    for i in range(n):
        i1, i2 = extents[i]
        if i2 < n - 1 and not x[i2 + 1] - x[i] > x[i] - x[i1]:
            raise InputError(
                f"label spread violated at position {i}: next non-neighbor "
                f"distance {x[i2 + 1] - x[i]} does not exceed {x[i] - x[i1]}"
            )
        if i1 > 0 and not x[i] - x[i1 - 1] > x[i2] - x[i]:
            raise InputError(
                f"label spread violated at position {i}: previous non-neighbor "
                f"distance {x[i] - x[i1 - 1]} does not exceed {x[i2] - x[i]}"
            )
    items = [None] * n
    for i in range(n):
        i1, i2 = extents[i]
        radius = max(x[i] - x[i1], x[i2] - x[i])
        if radius == 0:
            radius = _safe_radius(x, i)
        items[perm[i]] = PointedInterval(Interval(x[i] - radius, x[i] + radius), x[i])
    return Representation("cmptg", tuple(items))


def optimized_to_cicd(d: Digraph, labeling: Sequence) -> Representation:
    """Build a central catch representation from an optimized labeling.

    Points are the labels; each radius is the distance to the farthest
    out-neighbor, so everything at most that far lands inside the interval
    and everything farther stays out.
    """
    labels = validate_labeling(d.n, labeling)
    verdict = check_optimized(d, labels)
    if not verdict.ok:
        raise InputError(
            f"labeling is not optimized: violation at vertices {verdict.violation}"
        )
    order = tuple(sorted(range(d.n), key=lambda v: labels[v]))
    perm = validate_ordering(d.n, order)
    x = [labels[v] for v in perm]
    extents = _position_extents(
        lambda i, j: d.has_arc(perm[i], perm[j]), d.n
    )
    items = [None] * d.n
    for i in range(d.n):
        i1, i2 = extents[i]
        radius = max(x[i] - x[i1], x[i2] - x[i])
        if radius == 0:
            radius = _safe_radius(x, i)
        items[perm[i]] = PointedInterval(Interval(x[i] - radius, x[i] + radius), x[i])
    return Representation("cicd", tuple(items))


def cicd_to_labeling(rep: Representation) -> tuple:
    """Read a positive labeling off the centers of a central catch
    representation; gaps are preserved under the positivity shift."""
    _require_kind(rep, "cicd", "cicd_to_labeling")
    ties = tied_center_pairs(rep)
    if ties:
        i, j = ties[0]
        raise InputError(f"tied center points at vertices {i} and {j}")
    centers = rep.centers()
    lowest = min(centers) if centers else Fraction(0)
    shift = 1 - lowest if lowest <= 0 else Fraction(0)
    return tuple(c + shift for c in centers)


def rep_to_icd_digraph(items: Sequence[PointedInterval]) -> Digraph:
    """Digraph with an arc i -> j exactly when point j lies in interval i."""
    for k, item in enumerate(items):
        if not isinstance(item, PointedInterval):
            raise InputError(f"item {k}: expected a pointed interval")
    return realize(Representation("icd", tuple(items)))
