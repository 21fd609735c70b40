"""Interval representation data model, realization, and verification.

A representation is a kind tag plus one interval item per vertex.  Pointed
kinds (mptg, cmptg, icd, cicd) realize through point containment, tolerance
kinds (max_tolerance, unit_max_tolerance, fifty_mtg) through overlap length,
and the plain "interval" kind through bare intersection.  All comparisons
are exact rational; ties follow the non-strict conventions of the adjacency
rules (overlap >= tolerance, endpoint containment counts).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .core import Digraph, Graph, InputError, Structure
from .rational import format_rational, parse_rational


@dataclass(frozen=True)
class Interval:
    """Closed rational interval of positive length."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not isinstance(self.lo, Fraction) or not isinstance(self.hi, Fraction):
            raise InputError("interval endpoints must be Fractions")
        if not self.lo < self.hi:
            raise InputError(
                f"degenerate interval [{self.lo}, {self.hi}] (need lo < hi)"
            )

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def center(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi


def make_interval(lo, hi) -> Interval:
    return Interval(parse_rational(lo), parse_rational(hi))


@dataclass(frozen=True)
class PointedInterval:
    """Interval with a distinguished point inside it."""

    interval: Interval
    point: Fraction

    def __post_init__(self):
        if not self.interval.contains(self.point):
            raise InputError(
                f"point {self.point} lies outside [{self.interval.lo}, {self.interval.hi}]"
            )


@dataclass(frozen=True)
class ToleranceInterval:
    """Interval with a positive tolerance."""

    interval: Interval
    tolerance: Fraction

    def __post_init__(self):
        if not self.tolerance > 0:
            raise InputError(f"tolerance must be positive, got {self.tolerance}")


Item = Union[Interval, PointedInterval, ToleranceInterval]

POINTED_KINDS = ("mptg", "cmptg", "icd", "cicd")
TOLERANCE_KINDS = ("max_tolerance", "unit_max_tolerance", "fifty_mtg")
PLAIN_KINDS = ("interval",)
ALL_KINDS = POINTED_KINDS + TOLERANCE_KINDS + PLAIN_KINDS
DIRECTED_KINDS = ("icd", "cicd")
CENTRAL_KINDS = ("cmptg", "cicd")


def _base_interval(item: Item) -> Interval:
    return item.interval if isinstance(item, (PointedInterval, ToleranceInterval)) else item


@dataclass(frozen=True)
class Representation:
    """A class tag plus one interval item per vertex."""

    kind: str
    items: tuple

    def __post_init__(self):
        if self.kind not in ALL_KINDS:
            raise InputError(f"unknown representation kind {self.kind!r}")
        for index, item in enumerate(self.items):
            self._check_item(index, item)
        if self.kind == "unit_max_tolerance" and self.items:
            h = self.items[0].interval.length
            for index, item in enumerate(self.items):
                if item.interval.length != h:
                    raise InputError(
                        f"item {index}: length {item.interval.length} differs from "
                        f"common length {h} required by unit_max_tolerance"
                    )

    def _check_item(self, index: int, item: Item) -> None:
        if self.kind in POINTED_KINDS:
            if not isinstance(item, PointedInterval):
                raise InputError(f"item {index}: kind {self.kind} needs a pointed interval")
            if self.kind in CENTRAL_KINDS and item.point != item.interval.center:
                raise InputError(
                    f"item {index}: point {item.point} is not the center "
                    f"{item.interval.center} required by kind {self.kind}"
                )
        elif self.kind in TOLERANCE_KINDS:
            if not isinstance(item, ToleranceInterval):
                raise InputError(f"item {index}: kind {self.kind} needs a tolerance interval")
            if self.kind == "fifty_mtg" and item.tolerance * 2 != item.interval.length:
                raise InputError(
                    f"item {index}: tolerance {item.tolerance} is not half the "
                    f"length {item.interval.length} required by fifty_mtg"
                )
        else:
            if not isinstance(item, Interval):
                raise InputError(f"item {index}: kind {self.kind} needs a bare interval")

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def directed(self) -> bool:
        return self.kind in DIRECTED_KINDS

    def interval(self, i: int) -> Interval:
        return _base_interval(self.items[i])

    def centers(self) -> tuple:
        return tuple(self.interval(i).center for i in range(self.n))

    def lengths(self) -> tuple:
        return tuple(self.interval(i).length for i in range(self.n))


def tied_center_pairs(rep: Representation):
    """Pairs of vertices whose intervals share a center point."""
    centers = rep.centers()
    return [
        (i, j)
        for i in range(rep.n)
        for j in range(i + 1, rep.n)
        if centers[i] == centers[j]
    ]


def center_order(rep: Representation) -> tuple:
    """Vertices sorted by increasing interval center; rejects tied centers."""
    ties = tied_center_pairs(rep)
    if ties:
        i, j = ties[0]
        raise InputError(f"tied center points at vertices {i} and {j}")
    centers = rep.centers()
    return tuple(sorted(range(rep.n), key=lambda v: centers[v]))


def center_adjacent(a: Interval, b: Interval) -> bool:
    """Centers of both intervals lie in the intersection of the two."""
    gap = abs(b.center - a.center)
    return 2 * gap <= min(a.length, b.length)


def _overlap_length(a: Interval, b: Interval) -> Fraction:
    """Signed overlap: negative when the intervals are disjoint."""
    return min(a.hi, b.hi) - max(a.lo, b.lo)


def realize(rep: Representation, rule: Optional[str] = None) -> Structure:
    """Realize a representation into the graph or digraph it defines.

    ``rule`` overrides the adjacency rule implied by the kind: "mptg" and
    "icd" apply the pointed rules to any pointed items, "interval" applies
    plain intersection to the underlying intervals of any representation,
    and "max_tolerance" applies the overlap rule to tolerance items.
    """
    effective = rule or _default_rule(rep.kind)
    n = rep.n
    if effective == "icd":
        _need_points(rep)
        arcs = [
            (i, j)
            for i in range(n)
            for j in range(n)
            if i != j and rep.interval(i).contains(rep.items[j].point)
        ]
        return Digraph.from_arcs(n, arcs)
    if effective == "mptg":
        _need_points(rep)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rep.interval(j).contains(rep.items[i].point)
            and rep.interval(i).contains(rep.items[j].point)
        ]
        return Graph.from_edges(n, edges)
    if effective == "max_tolerance":
        if rep.kind not in TOLERANCE_KINDS:
            raise InputError(f"rule max_tolerance needs tolerance items, kind is {rep.kind}")
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if _overlap_length(rep.interval(i), rep.interval(j))
            >= max(rep.items[i].tolerance, rep.items[j].tolerance)
        ]
        return Graph.from_edges(n, edges)
    if effective == "interval":
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if _overlap_length(rep.interval(i), rep.interval(j)) >= 0
        ]
        return Graph.from_edges(n, edges)
    raise InputError(f"unknown realization rule {effective!r}")


def _default_rule(kind: str) -> str:
    if kind in ("mptg", "cmptg"):
        return "mptg"
    if kind in ("icd", "cicd"):
        return "icd"
    if kind in TOLERANCE_KINDS:
        return "max_tolerance"
    return "interval"


def _need_points(rep: Representation) -> None:
    if rep.kind not in POINTED_KINDS:
        raise InputError(f"pointed rule needs pointed items, kind is {rep.kind}")


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    missing: tuple  # in target, not realized
    extra: tuple  # realized, not in target

    def to_json(self) -> dict:
        if self.ok:
            return {"ok": True}
        return {
            "ok": False,
            "missing": [list(p) for p in self.missing],
            "extra": [list(p) for p in self.extra],
        }


def verify(rep: Representation, target: Structure, rule: Optional[str] = None) -> VerifyResult:
    """Realize rep and compare against target exactly."""
    realized = realize(rep, rule=rule)
    if realized.n != target.n:
        raise InputError(
            f"vertex count mismatch: representation has {realized.n}, target has {target.n}"
        )
    if isinstance(realized, Digraph) != isinstance(target, Digraph):
        raise InputError(
            "structure mismatch: representation realizes a "
            f"{'digraph' if isinstance(realized, Digraph) else 'graph'} but the target is a "
            f"{'digraph' if isinstance(target, Digraph) else 'graph'}"
        )
    if isinstance(realized, Digraph):
        got, want = realized.arcs, target.arcs
    else:
        got, want = realized.edges, target.edges
    missing = tuple(sorted(want - got))
    extra = tuple(sorted(got - want))
    return VerifyResult(not missing and not extra, missing, extra)


# Representation JSON round-trip.


def representation_from_json(data: dict) -> Representation:
    if not isinstance(data, dict):
        raise InputError(f"expected a JSON object, got {type(data).__name__}")
    kind = data.get("kind")
    if kind not in ALL_KINDS:
        raise InputError(f"unknown representation kind {kind!r}")
    raw_items = data.get("items")
    if not isinstance(raw_items, list):
        raise InputError("representation JSON needs an 'items' list")
    items = []
    for index, raw in enumerate(raw_items):
        items.append(_item_from_json(kind, index, raw))
    return Representation(kind, tuple(items))


def _item_from_json(kind: str, index: int, raw) -> Item:
    if not isinstance(raw, dict):
        raise InputError(f"item {index}: expected an object, got {raw!r}")
    try:
        lo = parse_rational(raw["lo"])
        hi = parse_rational(raw["hi"])
    except KeyError as exc:
        raise InputError(f"item {index}: missing field {exc}") from exc
    except ValueError as exc:
        raise InputError(f"item {index}: {exc}") from exc
    interval = Interval(lo, hi)
    try:
        if kind in POINTED_KINDS:
            if "point" in raw:
                point = parse_rational(raw["point"])
            elif kind in CENTRAL_KINDS:
                point = interval.center
            else:
                raise InputError(f"item {index}: kind {kind} needs a 'point' field")
            return PointedInterval(interval, point)
        if kind in TOLERANCE_KINDS:
            if "tolerance" in raw:
                tolerance = parse_rational(raw["tolerance"])
            elif kind == "fifty_mtg":
                tolerance = interval.length / 2
            else:
                raise InputError(f"item {index}: kind {kind} needs a 'tolerance' field")
            return ToleranceInterval(interval, tolerance)
        return interval
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(f"item {index}: {exc}") from exc


def representation_to_json(rep: Representation) -> dict:
    items = []
    for item in rep.items:
        base = _base_interval(item)
        entry = {"lo": format_rational(base.lo), "hi": format_rational(base.hi)}
        if isinstance(item, PointedInterval):
            entry["point"] = format_rational(item.point)
        elif isinstance(item, ToleranceInterval):
            entry["tolerance"] = format_rational(item.tolerance)
        items.append(entry)
    return {"kind": rep.kind, "items": items}


def pointed(lo, hi, point=None) -> PointedInterval:
    """Build a pointed interval; the point defaults to the center."""
    interval = make_interval(lo, hi)
    p = interval.center if point is None else parse_rational(point)
    return PointedInterval(interval, p)


def tolerant(lo, hi, tolerance=None) -> ToleranceInterval:
    """Build a tolerance interval; the tolerance defaults to half the length."""
    interval = make_interval(lo, hi)
    t = interval.length / 2 if tolerance is None else parse_rational(tolerance)
    return ToleranceInterval(interval, t)
