"""Bounded exhaustive recognizers, ordering searches, and matrix validators.

Everything here is deterministic: ordering searches walk prefixes in
lexicographic order, disjunction branches follow a fixed documented order,
and the first certificate found is the one returned.  Exhausted budgets
surface as a distinct "unknown" verdict, never as a "no".
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional, Sequence

from .conditions import (
    CONDITION_KINDS,
    check_condition,
    check_optimized,
    out_extent,
)
from .core import (
    BinaryMatrix,
    Digraph,
    Graph,
    InputError,
    Structure,
    augmented_adjacency,
    common_neighborhood_subgraph,
    is_tournament,
    validate_ordering,
)
from .feasibility import feasible_point
from .proper import proper_interval_ordering
from .rational import format_rational
from .reps import (
    Interval,
    PointedInterval,
    Representation,
    ToleranceInterval,
    center_order,
    realize,
    representation_to_json,
    verify,
)
from .transforms import optimized_to_cicd

RECOGNIZABLE_CLASSES = ("cicd", "cmptg", "fifty_mtg")
DEFAULT_MAX_N = {"cicd": 8, "cmptg": 7, "fifty_mtg": 5}
DEFAULT_SEARCH_MAX_N = 8


@dataclass(frozen=True)
class SearchLimits:
    """Budgets for the exhaustive searches.

    ``max_branches`` bounds the total number of search nodes: every
    ordering prefix examined and every feasibility solve consumes one
    unit.  ``budget_ms`` is a wall-clock bound checked at the same
    points.  ``max_n`` caps the vertex count; class-specific defaults
    apply when it is None.
    """

    max_n: Optional[int] = None
    max_branches: Optional[int] = None
    budget_ms: Optional[int] = None


@dataclass(frozen=True)
class Certificate:
    """Re-checkable evidence backing a verdict."""

    variant: str  # ordering | representation | labeling | obstruction_pair | block_form | none
    ordering: Optional[tuple] = None
    representation: Optional[Representation] = None
    labels: Optional[tuple] = None
    pair: Optional[tuple] = None
    split: Optional[object] = None  # int split index or "pure_N"
    detail: Optional[dict] = None

    def to_json(self) -> dict:
        data = {"variant": self.variant}
        if self.ordering is not None:
            data["ordering"] = list(self.ordering)
        if self.representation is not None:
            data["representation"] = representation_to_json(self.representation)
        if self.labels is not None:
            data["labels"] = [format_rational(x) for x in self.labels]
        if self.pair is not None:
            data["pair"] = list(self.pair)
        if self.split is not None:
            data["split"] = self.split
        if self.detail is not None:
            data["detail"] = self.detail
        return data


NONE_CERTIFICATE = Certificate("none")


@dataclass(frozen=True)
class Verdict:
    status: str  # yes | no | unknown
    certificate: Optional[Certificate] = None
    reason: str = ""

    def to_json(self) -> dict:
        data = {"verdict": self.status}
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_json()
        if self.reason:
            data["reason"] = self.reason
        return data


class _BudgetExhausted(Exception):
    pass


class _Budget:
    """Search-node and wall-clock budget; spend() raises when exceeded."""

    def __init__(self, limits: SearchLimits):
        self.max_nodes = limits.max_branches
        self.spent = 0
        self.deadline = (
            time.monotonic() + limits.budget_ms / 1000.0
            if limits.budget_ms is not None
            else None
        )

    def spend(self) -> None:
        self.spent += 1
        if self.max_nodes is not None and self.spent > self.max_nodes:
            raise _BudgetExhausted("search-node budget exhausted")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _BudgetExhausted("time budget exhausted")


def _unknown(reason: str) -> Verdict:
    return Verdict("unknown", None, reason)


# Ordering search.


def find_ordering(structure: Structure, kind: str, limits: SearchLimits = SearchLimits()) -> Verdict:
    """Lexicographically smallest ordering satisfying the condition.

    Walks ordering prefixes depth-first, pruning as soon as a prefix
    violates the condition, so the first complete ordering reached is the
    lexicographic minimum.
    """
    if kind not in CONDITION_KINDS:
        raise InputError(f"unknown condition kind {kind!r}")
    n = structure.n
    max_n = limits.max_n if limits.max_n is not None else DEFAULT_SEARCH_MAX_N
    if n > max_n:
        return _unknown(f"{n} vertices exceed the ordering-search bound {max_n}")
    budget = _Budget(limits)
    prefix_kind = "icd_order" if kind == "cicd_necessary" else kind

    def leaf_ok(perm) -> bool:
        if kind == "cicd_necessary":
            return check_condition(structure, perm, kind).ok
        return True

    try:
        found = _dfs_orderings(structure, prefix_kind, leaf_ok, budget)
    except _BudgetExhausted as exc:
        return _unknown(str(exc))
    if found is None:
        return Verdict("no", NONE_CERTIFICATE)
    return Verdict("yes", Certificate("ordering", ordering=found))


def _dfs_orderings(
    structure: Structure,
    prefix_kind: str,
    leaf_ok: Callable,
    budget: _Budget,
    leaf_action: Optional[Callable] = None,
):
    """Depth-first lexicographic walk over orderings.

    ``prefix_kind`` names the condition checked incrementally on prefixes
    (only tuples ending at the newest position need checking).  At full
    length, ``leaf_ok`` filters and ``leaf_action`` (when given) may return
    a final result; without a leaf_action the ordering itself is returned.
    """
    n = structure.n
    prefix = []
    used = [False] * n

    def extend() -> Optional[object]:
        budget.spend()
        k = len(prefix)
        if k > 1 and not _prefix_ok(structure, prefix, prefix_kind):
            return None
        if k == n:
            perm = tuple(prefix)
            if not leaf_ok(perm):
                return None
            if leaf_action is None:
                return perm
            return leaf_action(perm)
        for v in range(n):
            if used[v]:
                continue
            used[v] = True
            prefix.append(v)
            result = extend()
            used[v] = False
            prefix.pop()
            if result is not None:
                return result
        return None

    if n == 0:
        budget.spend()
        if leaf_ok(()):
            return () if leaf_action is None else leaf_action(())
        return None
    return extend()


def _prefix_ok(structure: Structure, prefix, kind: str) -> bool:
    """Check only the condition tuples whose last position is the newest."""
    last = len(prefix) - 1
    if kind == "icd_order":
        z = prefix[last]
        for x_pos in range(last):
            x = prefix[x_pos]
            for y_pos in range(x_pos + 1, last):
                y = prefix[y_pos]
                if structure.has_arc(x, z) and not structure.has_arc(x, y):
                    return False
                if structure.has_arc(z, x) and not structure.has_arc(z, y):
                    return False
        return True
    if kind in ("mptg_4point", "cmptg_necessary"):
        y = prefix[last]
        require_ends = kind == "cmptg_necessary"
        for x_pos in range(last):
            x = prefix[x_pos]
            for u_pos in range(x_pos + 1, last):
                u = prefix[u_pos]
                if not structure.has_edge(u, y):
                    continue
                for v_pos in range(u_pos + 1, last):
                    v = prefix[v_pos]
                    if not structure.has_edge(x, v):
                        continue
                    if not structure.has_edge(u, v):
                        return False
                    if require_ends and not (
                        structure.has_edge(x, u) or structure.has_edge(v, y)
                    ):
                        return False
        return True
    raise InputError(f"no incremental check for condition {kind!r}")


# Matrix pattern for the pointed four-point condition.


def check_mptg_matrix_pattern(m: BinaryMatrix) -> bool:
    """Every 0 above the diagonal has only 0s to its right or only 0s above.

    Requires a square matrix with an all-ones diagonal.
    """
    if not m.is_square:
        raise InputError(f"matrix is {m.n_rows}x{m.n_cols}, need square")
    n = m.n_rows
    for i in range(n):
        if m.rows[i][i] != 1:
            raise InputError(f"diagonal entry ({i},{i}) is 0; need an augmented matrix")
    for i in range(n):
        for j in range(i + 1, n):
            if m.rows[i][j] != 0:
                continue
            right_zero = all(m.rows[i][jj] == 0 for jj in range(j + 1, n))
            above_zero = all(m.rows[ii][j] == 0 for ii in range(i))
            if not (right_zero or above_zero):
                return False
    return True


# Proper interval recognition wrapped as a verdict.


def is_proper_interval(g: Graph) -> Verdict:
    """Closed-neighborhood-consecutive ordering, or a definite no."""
    ordering = proper_interval_ordering(g)
    if ordering is None:
        return Verdict("no", NONE_CERTIFICATE)
    return Verdict("yes", Certificate("ordering", ordering=ordering))


def common_neighborhood_obstruction(g: Graph) -> Certificate:
    """First non-adjacent pair whose common neighborhood induces a graph
    that is not proper interval; such a pair rules out a central pointed
    representation."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            sub, vertices = common_neighborhood_subgraph(g, u, v)
            if proper_interval_ordering(sub) is None:
                return Certificate(
                    "obstruction_pair",
                    pair=(u, v),
                    detail={"common_neighborhood": list(vertices)},
                )
    return NONE_CERTIFICATE


# Induced C4 / P4 placement conditions for central representations.


def _four_vertex_patterns(g: Graph):
    """Induced 4-cycles (with their edges) and induced 4-paths (with their
    ending edges)."""
    cycles = []
    paths = []
    for quad in combinations(range(g.n), 4):
        edges = [
            (a, b) for a, b in combinations(quad, 2) if g.has_edge(a, b)
        ]
        degree = {v: 0 for v in quad}
        for a, b in edges:
            degree[a] += 1
            degree[b] += 1
        if len(edges) == 4 and all(degree[v] == 2 for v in quad):
            cycles.append((quad, frozenset(edges)))
        elif len(edges) == 3 and sorted(degree.values()) == [1, 1, 2, 2]:
            ends = [v for v in quad if degree[v] == 1]
            end_pairs = []
            for e in ends:
                partner = next(
                    b if a == e else a for a, b in edges if e in (a, b)
                )
                end_pairs.append(frozenset((e, partner)))
            paths.append((quad, end_pairs))
    return cycles, paths


def _c4_p4_witness(g: Graph, ordering, patterns=None):
    """None when every induced C4 is circularly consecutive and every
    induced P4 has consecutive ending-edge vertices at one end."""
    place = {v: k for k, v in enumerate(ordering)}
    cycles, paths = patterns if patterns is not None else _four_vertex_patterns(g)
    for quad, edges in cycles:
        ring = sorted(quad, key=lambda v: place[v])
        around = all(
            (min(a, b), max(a, b)) in edges
            for a, b in zip(ring, ring[1:] + ring[:1])
        )
        if not around:
            return {"kind": "c4", "vertices": list(quad), "order": ring}
    for quad, end_pairs in paths:
        line = sorted(quad, key=lambda v: place[v])
        blocks = [frozenset(line[k : k + 2]) for k in range(3)]
        if not any(pair in blocks for pair in end_pairs):
            return {"kind": "p4", "vertices": list(quad), "order": line}
    return None


def verify_c4_p4_conditions(rep: Representation):
    """Check the induced C4/P4 placement conditions in the center order.

    Returns (ok, witness); the witness names the offending four vertices.
    Tied centers are rejected.
    """
    if rep.kind != "cmptg":
        raise InputError(f"verify_c4_p4_conditions expects a cmptg representation, got {rep.kind}")
    order = center_order(rep)
    g = realize(rep)
    witness = _c4_p4_witness(g, order)
    return witness is None, witness


# Labeling feasibility for a fixed catch-digraph ordering.


def cicd_feasible_for_ordering(d: Digraph, ordering: Sequence[int]) -> Certificate:
    """Strictly increasing positions making the ordering an optimized
    labeling, or a Farkas witness that none exist.

    With increasing positions the distance from a vertex to its nearest
    non-out-neighbor on either side lower-bounds the distance to every
    non-out-neighbor on that side, so only the two boundary comparisons
    per vertex are constrained.  Strict inequalities are normalized to
    slack one, valid because the system is positively homogeneous.
    """
    perm = validate_ordering(d.n, ordering)
    precheck = check_condition(d, perm, "icd_order")
    if not precheck.ok:
        raise InputError(
            f"ordering violates the catch-order condition at positions {precheck.violation}"
        )
    n = d.n
    if n == 0:
        return Certificate("labeling", labels=())
    rows = []
    descriptions = []

    def var(position):
        coeffs = [Fraction(0)] * n
        coeffs[position] = Fraction(1)
        return coeffs

    def minus(a, b):
        return [x - y for x, y in zip(a, b)]

    rows.append((var(0), True))
    descriptions.append(("positive", 0))
    for k in range(1, n):
        rows.append((minus(var(k), var(k - 1)), True))
        descriptions.append(("increase", k))
    for i in range(n):
        lo, hi = out_extent(d, perm, i)
        if lo > 0:
            # distance to the left boundary non-out-neighbor beats the reach
            # to the right: (p_i - p_{lo-1}) - (p_hi - p_i) > 0
            rows.append(
                (
                    minus(minus(var(i), var(lo - 1)), minus(var(hi), var(i))),
                    True,
                )
            )
            descriptions.append(("left_clearance", i))
        if hi < n - 1:
            rows.append(
                (
                    minus(minus(var(hi + 1), var(i)), minus(var(i), var(lo))),
                    True,
                )
            )
            descriptions.append(("right_clearance", i))
    result = feasible_point(n, rows)
    if result.feasible:
        labels = [Fraction(0)] * n
        for position, value in enumerate(result.point):
            labels[perm[position]] = value
        verdict = check_optimized(d, labels)
        if not verdict.ok:
            raise RuntimeError("solver produced a non-optimized labeling")
        return Certificate("labeling", labels=tuple(labels))
    farkas = [
        [list(desc), format_rational(y)]
        for desc, y in zip(descriptions, result.farkas)
        if y != 0
    ]
    return Certificate("none", detail={"farkas": farkas, "ordering": list(perm)})


# Exhaustive recognizers.


def exhaustive_recognize(
    structure: Structure, cls: str, limits: SearchLimits = SearchLimits()
) -> Verdict:
    """Search all vertex orderings for a representation of the given class.

    Orderings are walked lexicographically; per ordering the adjacency
    constraints form an exact rational feasibility system whose non-edge
    disjunction branches are enumerated in a fixed order.  The first
    feasible representation is re-verified and returned.  A "no" is only
    ever issued after the full enumeration; budget exhaustion yields
    "unknown".
    """
    if cls not in RECOGNIZABLE_CLASSES:
        raise InputError(f"unknown recognizable class {cls!r}")
    if cls == "cicd":
        if not isinstance(structure, Digraph):
            raise InputError("class cicd applies to digraphs")
    else:
        if not isinstance(structure, Graph):
            raise InputError(f"class {cls} applies to graphs")
    max_n = limits.max_n if limits.max_n is not None else DEFAULT_MAX_N[cls]
    if structure.n > max_n:
        return _unknown(
            f"{structure.n} vertices exceed the search bound {max_n} for class {cls}"
        )
    if structure.n == 0:
        kind = {"cicd": "cicd", "cmptg": "cmptg", "fifty_mtg": "fifty_mtg"}[cls]
        empty = Representation(kind, ())
        return Verdict("yes", Certificate("representation", representation=empty))
    budget = _Budget(limits)
    try:
        if cls == "cicd":
            return _recognize_cicd(structure, budget)
        if cls == "cmptg":
            return _recognize_cmptg(structure, budget)
        return _recognize_fifty(structure, budget)
    except _BudgetExhausted as exc:
        return _unknown(str(exc))


def _recognize_cicd(d: Digraph, budget: _Budget) -> Verdict:
    obstructions = []
    icd_orderings = []

    def leaf(perm):
        icd_orderings.append(list(perm))
        necessity = check_condition(d, perm, "cicd_necessary")
        if not necessity.ok:
            obstructions.append(
                {
                    "ordering": list(perm),
                    "condition": "cicd_necessary",
                    "part": necessity.part,
                    "violation": list(necessity.violation),
                }
            )
            return None
        budget.spend()
        certificate = cicd_feasible_for_ordering(d, perm)
        if certificate.variant == "none":
            obstructions.append(
                {
                    "ordering": list(perm),
                    "condition": "position_feasibility",
                    "farkas": certificate.detail["farkas"],
                }
            )
            return None
        rep = optimized_to_cicd(d, certificate.labels)
        if not verify(rep, d).ok:
            raise RuntimeError("recognized representation failed verification")
        return Verdict("yes", Certificate("representation", representation=rep))

    found = _dfs_orderings(d, "icd_order", lambda perm: True, budget, leaf)
    if found is not None:
        return found
    detail = {
        "icd_orderings": icd_orderings[:20],
        "obstructions": obstructions[:20],
    }
    if len(icd_orderings) > 20 or len(obstructions) > 20:
        detail["truncated"] = True
    if not icd_orderings:
        detail["note"] = "no ordering satisfies the catch-order condition"
    return Verdict("no", Certificate("none", detail=detail))


def _recognize_cmptg(g: Graph, budget: _Budget) -> Verdict:
    n = g.n
    patterns = _four_vertex_patterns(g)

    def leaf(perm):
        if _c4_p4_witness(g, perm, patterns) is not None:
            return None
        sides = _cmptg_branch_sides(g, perm)
        if sides is None:
            return None
        for combo in _branch_products(sides):
            budget.spend()
            rep = _cmptg_feasible(g, perm, combo)
            if rep is not None:
                if not verify(rep, g).ok:
                    raise RuntimeError("recognized representation failed verification")
                return Verdict("yes", Certificate("representation", representation=rep))
        return None

    found = _dfs_orderings(g, "cmptg_necessary", lambda perm: True, budget, leaf)
    if found is not None:
        return found
    return Verdict("no", NONE_CERTIFICATE)


def _cmptg_branch_sides(g: Graph, perm):
    """Allowed witness sides per non-edge under a candidate center order.

    A non-edge (u, v) needs the center gap to exceed one of the two radii;
    the earlier vertex's radius cannot be the witness when it still has a
    neighbor beyond v, and symmetrically for the later vertex.
    """
    n = g.n
    sides = []
    for u_pos in range(n):
        for v_pos in range(u_pos + 1, n):
            if g.has_edge(perm[u_pos], perm[v_pos]):
                continue
            allowed = []
            if not any(
                g.has_edge(perm[u_pos], perm[w]) for w in range(v_pos + 1, n)
            ):
                allowed.append("earlier")
            if not any(
                g.has_edge(perm[w], perm[v_pos]) for w in range(u_pos)
            ):
                allowed.append("later")
            if not allowed:
                return None
            sides.append(((u_pos, v_pos), allowed))
    return sides


def _branch_products(sides):
    """All combinations of allowed sides, in documented lexicographic order."""
    if not sides:
        yield []
        return
    (pair, allowed), rest = sides[0], sides[1:]
    for choice in allowed:
        for combo in _branch_products(rest):
            yield [(pair, choice)] + combo


def _cmptg_feasible(g: Graph, perm, combo) -> Optional[Representation]:
    """Solve the center/radius system for one branch choice."""
    n = g.n
    # Variables: centers at positions 1..n-1 (position 0 pinned to zero),
    # then radii at positions 0..n-1.
    num_vars = (n - 1) + n

    def center(position, coeffs, sign):
        if position > 0:
            coeffs[position - 1] += sign

    def radius(position, coeffs, sign):
        coeffs[(n - 1) + position] += sign

    rows = []
    for k in range(1, n):
        coeffs = [Fraction(0)] * num_vars
        center(k, coeffs, +1)
        center(k - 1, coeffs, -1)
        rows.append((coeffs, True))
    for i in range(n):
        coeffs = [Fraction(0)] * num_vars
        radius(i, coeffs, +1)
        rows.append((coeffs, True))
    for u_pos in range(n):
        for v_pos in range(u_pos + 1, n):
            if not g.has_edge(perm[u_pos], perm[v_pos]):
                continue
            for side in (u_pos, v_pos):
                coeffs = [Fraction(0)] * num_vars
                radius(side, coeffs, +1)
                center(v_pos, coeffs, -1)
                center(u_pos, coeffs, +1)
                rows.append((coeffs, False))
    for (u_pos, v_pos), choice in combo:
        coeffs = [Fraction(0)] * num_vars
        center(v_pos, coeffs, +1)
        center(u_pos, coeffs, -1)
        radius(u_pos if choice == "earlier" else v_pos, coeffs, -1)
        rows.append((coeffs, True))
    result = feasible_point(num_vars, rows)
    if not result.feasible:
        return None
    centers = [Fraction(0)] + list(result.point[: n - 1])
    radii = list(result.point[n - 1 :])
    items = [None] * n
    for position in range(n):
        c, r = centers[position], radii[position]
        items[perm[position]] = PointedInterval(Interval(c - r, c + r), c)
    return Representation("cmptg", tuple(items))


def _recognize_fifty(g: Graph, budget: _Budget) -> Verdict:
    n = g.n

    def leaf(perm):
        options = _fifty_branch_options(g, perm)
        for combo in _branch_products(options):
            budget.spend()
            rep = _fifty_feasible(g, perm, combo)
            if rep is not None:
                if not verify(rep, g).ok:
                    raise RuntimeError("recognized representation failed verification")
                return Verdict("yes", Certificate("representation", representation=rep))
        return None

    found = _dfs_orderings_plain(g, budget, leaf)
    if found is not None:
        return found
    return Verdict("no", NONE_CERTIFICATE)


def _dfs_orderings_plain(structure: Structure, budget: _Budget, leaf_action):
    """Lexicographic ordering walk without a prefix condition."""
    n = structure.n
    prefix = []
    used = [False] * n

    def extend():
        budget.spend()
        if len(prefix) == n:
            return leaf_action(tuple(prefix))
        for v in range(n):
            if used[v]:
                continue
            used[v] = True
            prefix.append(v)
            result = extend()
            used[v] = False
            prefix.pop()
            if result is not None:
                return result
        return None

    if n == 0:
        budget.spend()
        return leaf_action(())
    return extend()


def _fifty_branch_options(g: Graph, perm):
    """Branch options per non-edge under a left-endpoint order.

    The overlap of (u, v) with u first must fall below half of one of the
    two lengths; it can do so because u's interval ends early ("short_cut"
    against either length) or because v's interval is outright short
    ("short_later").  u's interval cannot end before v starts plus half of
    u when u still reaches a later neighbor.
    """
    n = g.n
    options = []
    for u_pos in range(n):
        for v_pos in range(u_pos + 1, n):
            if g.has_edge(perm[u_pos], perm[v_pos]):
                continue
            allowed = []
            reaches_past = any(
                g.has_edge(perm[u_pos], perm[w]) for w in range(v_pos + 1, n)
            )
            if not reaches_past:
                allowed.append("cut_vs_earlier")
            allowed.append("short_later")
            allowed.append("cut_vs_later")
            options.append(((u_pos, v_pos), allowed))
    return options


def _fifty_feasible(g: Graph, perm, combo) -> Optional[Representation]:
    """Solve the endpoint system for one branch choice of a 50% search."""
    n = g.n
    # Variables: left endpoints at positions 1..n-1 (position 0 pinned to
    # zero), then right endpoints at positions 0..n-1.
    num_vars = (n - 1) + n

    def left(position, coeffs, factor):
        if position > 0:
            coeffs[position - 1] += factor

    def right(position, coeffs, factor):
        coeffs[(n - 1) + position] += factor

    def length(position, coeffs, factor):
        right(position, coeffs, factor)
        left(position, coeffs, -factor)

    rows = []
    for k in range(1, n):
        coeffs = [Fraction(0)] * num_vars
        left(k, coeffs, +1)
        left(k - 1, coeffs, -1)
        rows.append((coeffs, False))
    for i in range(n):
        coeffs = [Fraction(0)] * num_vars
        length(i, coeffs, +1)
        rows.append((coeffs, True))
    for u_pos in range(n):
        for v_pos in range(u_pos + 1, n):
            u_first, v_second = u_pos, v_pos
            if not g.has_edge(perm[u_pos], perm[v_pos]):
                continue
            # overlap = min(right_u, right_v) - left_v must reach half of
            # both lengths; right_v - left_v is the full length of v, so
            # only three comparisons are binding (doubled to clear halves).
            for target in (u_first, v_second):
                coeffs = [Fraction(0)] * num_vars
                right(u_first, coeffs, +2)
                left(v_second, coeffs, -2)
                length(target, coeffs, -1)
                rows.append((coeffs, False))
            coeffs = [Fraction(0)] * num_vars
            length(v_second, coeffs, +2)
            length(u_first, coeffs, -1)
            rows.append((coeffs, False))
    for (u_pos, v_pos), choice in combo:
        coeffs = [Fraction(0)] * num_vars
        if choice == "cut_vs_earlier":
            length(u_pos, coeffs, +1)
            right(u_pos, coeffs, -2)
            left(v_pos, coeffs, +2)
        elif choice == "cut_vs_later":
            length(v_pos, coeffs, +1)
            right(u_pos, coeffs, -2)
            left(v_pos, coeffs, +2)
        else:  # short_later
            length(u_pos, coeffs, +1)
            length(v_pos, coeffs, -2)
        rows.append((coeffs, True))
    result = feasible_point(num_vars, rows)
    if not result.feasible:
        return None
    lefts = [Fraction(0)] + list(result.point[: n - 1])
    rights = list(result.point[n - 1 :])
    items = [None] * n
    for position in range(n):
        lo, hi = lefts[position], rights[position]
        items[perm[position]] = ToleranceInterval(Interval(lo, hi), (hi - lo) / 2)
    return Representation("fifty_mtg", tuple(items))


# Tournament block decomposition.


def tournament_block_form(d: Digraph, limits: SearchLimits = SearchLimits()) -> Verdict:
    """Ordering plus split putting the augmented matrix into the staircase
    block form, or the plain lower-triangular form.

    Orderings are tried lexicographically; under each, the pure triangular
    form is tested before split indices in increasing order.
    """
    if not is_tournament(d):
        raise InputError("tournament_block_form needs a tournament")
    n = d.n
    max_n = limits.max_n if limits.max_n is not None else DEFAULT_SEARCH_MAX_N
    if n > max_n:
        return _unknown(f"{n} vertices exceed the ordering-search bound {max_n}")
    budget = _Budget(limits)

    def leaf(perm):
        split = _block_form_split(d, perm)
        if split is None:
            return None
        return Verdict(
            "yes", Certificate("block_form", ordering=perm, split=split)
        )

    try:
        found = _dfs_orderings_plain(d, budget, leaf)
    except _BudgetExhausted as exc:
        return _unknown(str(exc))
    if found is not None:
        return found
    return Verdict("no", NONE_CERTIFICATE)


def _block_form_split(d: Digraph, perm):
    matrix = augmented_adjacency(d, perm)
    if _is_pure_lower(matrix):
        return "pure_N"
    for split in range(1, matrix.n_rows):
        if _split_blocks_ok(matrix, split):
            return split
    return None


def _is_pure_lower(m: BinaryMatrix) -> bool:
    n = m.n_rows
    return all(
        m.rows[i][j] == (1 if j <= i else 0) for i in range(n) for j in range(n)
    )


def _split_blocks_ok(m: BinaryMatrix, split: int) -> bool:
    n = m.n_rows
    # Upper-left: upper triangular, everything on or above the diagonal 1.
    for i in range(split):
        for j in range(split):
            if m.rows[i][j] != (1 if j >= i else 0):
                return False
    # Lower-right: lower triangular, everything on or below the diagonal 1.
    for i in range(split, n):
        for j in range(split, n):
            if m.rows[i][j] != (1 if j <= i else 0):
                return False
    # Upper-right: staircase clustered in the top-left corner.
    for i in range(split):
        for j in range(split, n):
            if m.rows[i][j] == 1:
                if i > 0 and m.rows[i - 1][j] != 1:
                    return False
                if j > split and m.rows[i][j - 1] != 1:
                    return False
    # Lower-left: complement of the transposed staircase.
    for i in range(split, n):
        for j in range(split):
            if m.rows[i][j] != 1 - m.rows[j][i]:
                return False
    return True


def validate_block_form(d: Digraph, ordering: Sequence[int], split) -> bool:
    """Re-check a block-form certificate."""
    perm = validate_ordering(d.n, ordering)
    if not is_tournament(d):
        raise InputError("validate_block_form needs a tournament")
    matrix = augmented_adjacency(d, perm)
    if split == "pure_N":
        return _is_pure_lower(matrix)
    if not isinstance(split, int) or not 1 <= split < d.n:
        raise InputError(f"split must be 'pure_N' or an integer in 1..{d.n - 1}")
    return _split_blocks_ok(matrix, split)
