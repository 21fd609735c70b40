"""Ordering-based adjacency conditions and labeling checks.

Every condition quantifies over positions of a fixed vertex ordering.  The
checkers report the lexicographically first violating tuple of positions,
which makes verdicts reproducible and certificates re-checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Digraph, Graph, InputError, Structure, validate_ordering

CONDITION_KINDS = ("mptg_4point", "cmptg_necessary", "icd_order", "cicd_necessary")


@dataclass(frozen=True)
class ConditionResult:
    ok: bool
    violation: Optional[tuple]  # positions in the ordering (vertices for labelings)
    part: Optional[str] = None  # clause that failed, for multi-clause conditions

    def to_json(self) -> dict:
        data = {"ok": self.ok}
        if not self.ok:
            data["violation"] = list(self.violation)
            if self.part:
                data["part"] = self.part
        return data


def check_condition(structure: Structure, ordering: Sequence[int], kind: str) -> ConditionResult:
    """Check one of the ordering conditions; kind must match the structure."""
    perm = validate_ordering(structure.n, ordering)
    if kind == "mptg_4point":
        _need_graph(structure, kind)
        return _check_4point(structure, perm, require_ends=False)
    if kind == "cmptg_necessary":
        _need_graph(structure, kind)
        return _check_4point(structure, perm, require_ends=True)
    if kind == "icd_order":
        _need_digraph(structure, kind)
        return _check_icd_order(structure, perm)
    if kind == "cicd_necessary":
        _need_digraph(structure, kind)
        result = _check_icd_order(structure, perm)
        if not result.ok:
            return result
        return _check_extent_monotone(structure, perm)
    raise InputError(f"unknown condition kind {kind!r}")


def _need_graph(structure: Structure, kind: str) -> None:
    if not isinstance(structure, Graph):
        raise InputError(f"condition {kind} applies to graphs, got a digraph")


def _need_digraph(structure: Structure, kind: str) -> None:
    if not isinstance(structure, Digraph):
        raise InputError(f"condition {kind} applies to digraphs, got a graph")


def _check_4point(g: Graph, perm, require_ends: bool) -> ConditionResult:
    """Positions x<u<v<y with xv,uy edges force uv (and an end edge if asked)."""
    n = g.n
    for x in range(n):
        for u in range(x + 1, n):
            for v in range(u + 1, n):
                for y in range(v + 1, n):
                    if not (
                        g.has_edge(perm[x], perm[v]) and g.has_edge(perm[u], perm[y])
                    ):
                        continue
                    if not g.has_edge(perm[u], perm[v]):
                        return ConditionResult(False, (x, u, v, y), "middle")
                    if require_ends and not (
                        g.has_edge(perm[x], perm[u]) or g.has_edge(perm[v], perm[y])
                    ):
                        return ConditionResult(False, (x, u, v, y), "ends")
    return ConditionResult(True, None)


def _check_icd_order(d: Digraph, perm) -> ConditionResult:
    """Positions x<y<z: an arc x->z forces x->y, and z->x forces z->y."""
    n = d.n
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                if d.has_arc(perm[x], perm[z]) and not d.has_arc(perm[x], perm[y]):
                    return ConditionResult(False, (x, y, z), "forward")
                if d.has_arc(perm[z], perm[x]) and not d.has_arc(perm[z], perm[y]):
                    return ConditionResult(False, (x, y, z), "backward")
    return ConditionResult(True, None)


def out_extent(structure: Structure, perm, position: int) -> tuple:
    """Smallest and largest position reached from a position (self included).

    For digraphs the reach is the out-neighborhood, for graphs the open
    neighborhood.
    """
    u = perm[position]
    if isinstance(structure, Digraph):
        reach = structure.out_neighbors(u)
    else:
        reach = structure.neighbors(u)
    place = {v: k for k, v in enumerate(perm)}
    positions = [position] + [place[v] for v in reach]
    return min(positions), max(positions)


def _check_extent_monotone(d: Digraph, perm) -> ConditionResult:
    """For positions i<j the reach extents must not both strictly regress."""
    n = d.n
    extents = [out_extent(d, perm, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if extents[i][0] > extents[j][0] and extents[i][1] > extents[j][1]:
                return ConditionResult(False, (i, j), "cicd2")
    return ConditionResult(True, None)


def validate_labeling(n: int, labels: Sequence) -> tuple:
    """Check a vertex labeling is positive and injective; return as tuple."""
    values = tuple(labels)
    if len(values) != n:
        raise InputError(f"labeling has {len(values)} entries, expected {n}")
    for v, value in enumerate(values):
        if not value > 0:
            raise InputError(f"label of vertex {v} must be positive, got {value}")
    if len(set(values)) != n:
        seen = {}
        for v, value in enumerate(values):
            if value in seen:
                raise InputError(
                    f"labels of vertices {seen[value]} and {v} coincide ({value})"
                )
            seen[value] = v
    return values


def check_optimized(structure: Structure, labels: Sequence) -> ConditionResult:
    """Every (out-)neighbor distance beats every non-neighbor distance.

    Violations are vertex triples (i, j, k) with j a neighbor and k a
    non-neighbor of i at distance <= the neighbor distance.
    """
    values = validate_labeling(structure.n, labels)
    n = structure.n
    directed = isinstance(structure, Digraph)
    for i in range(n):
        if directed:
            reach = structure.out_neighbors(i)
        else:
            reach = structure.neighbors(i)
        others = [k for k in range(n) if k != i and k not in reach]
        if not reach or not others:
            continue
        for j in sorted(reach):
            dij = abs(values[i] - values[j])
            for k in others:
                if not dij < abs(values[i] - values[k]):
                    return ConditionResult(False, (i, j, k))
    return ConditionResult(True, None)
