"""Named generators for the concrete instances and counterexamples.

Every instance that carries a representation is verified against its
intended graph or digraph at construction time, so a formula regression
cannot ship silently.  Decimal source values are stored as exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (
    Digraph,
    Graph,
    InputError,
    Structure,
    complement_graph,
    cycle_graph,
    star_graph,
)
from .rational import format_rational, parse_rational
from .reps import (
    Interval,
    Representation,
    ToleranceInterval,
    pointed,
    representation_to_json,
    tolerant,
    verify,
)


@dataclass(frozen=True)
class Instance:
    name: str
    structure: Structure
    rep: Optional[Representation] = None
    labeling: Optional[tuple] = None
    expected_verdicts: tuple = ()

    def __post_init__(self):
        if self.rep is not None:
            result = verify(self.rep, self.structure)
            if not result.ok:
                raise RuntimeError(
                    f"catalog instance {self.name!r} does not realize its structure: "
                    f"missing {result.missing}, extra {result.extra}"
                )

    def to_json(self) -> dict:
        data = {"name": self.name, "structure": self.structure.to_json()}
        if self.rep is not None:
            data["representation"] = representation_to_json(self.rep)
        if self.labeling is not None:
            data["labels"] = [format_rational(x) for x in self.labeling]
        data["expected_verdicts"] = [
            [cls, "yes" if claim else "no"] for cls, claim in self.expected_verdicts
        ]
        return data


INSTANCE_NAMES = (
    "k1n_cmptg",
    "cn_50mtg",
    "c6bar_50mtg",
    "c4_umtg",
    "c4_50",
    "k13_50",
    "k1n_interval",
    "claw_plus_two",
    "claw_plus_two_minus_u",
    "maehara_g1",
    "od11",
)

_PARAMETRIC = {"k1n_cmptg": "n >= 1", "cn_50mtg": "n >= 3", "k1n_interval": "n >= 1"}


def list_instances():
    return list(INSTANCE_NAMES)


def instance(name: str, n: Optional[int] = None, alpha=None) -> Instance:
    """Build a named instance; n and alpha apply to the parametric ones."""
    if name not in INSTANCE_NAMES:
        raise InputError(f"unknown catalog instance {name!r}; see --list")
    if name not in _PARAMETRIC and n is not None:
        raise InputError(f"instance {name!r} takes no size parameter")
    if name != "k1n_cmptg" and alpha is not None:
        raise InputError(f"instance {name!r} takes no alpha parameter")
    if name == "k1n_cmptg":
        return _k1n_cmptg(3 if n is None else n, alpha)
    if name == "cn_50mtg":
        return _cn_50mtg(5 if n is None else n)
    if name == "c6bar_50mtg":
        return _c6bar_50mtg()
    if name == "c4_umtg":
        return _c4_umtg()
    if name == "c4_50":
        return _c4_50()
    if name == "k13_50":
        return _k13_50()
    if name == "k1n_interval":
        return _k1n_interval(3 if n is None else n)
    if name == "claw_plus_two":
        return _claw_plus_two()
    if name == "claw_plus_two_minus_u":
        return _claw_plus_two_minus_u()
    if name == "maehara_g1":
        return _maehara_g1()
    return _od11()


def _k1n_cmptg(n: int, alpha) -> Instance:
    """Star with a central representation: hub [10,20], nested pendant
    intervals crowding the hub center from the left."""
    if n < 1:
        raise InputError(f"k1n_cmptg needs n >= 1, got {n}")
    bound = Fraction(5, 3 * 2 ** (n - 1) - 2)
    if alpha is None:
        value = bound / 2
    else:
        value = parse_rational(alpha)
        if not 0 < value < bound:
            raise InputError(
                f"alpha must lie strictly between 0 and {bound} for n={n}, got {value}"
            )
    items = [pointed(10, 20)]
    for k in range(1, n + 1):
        stretch = (3 * 2 ** (k - 1) - 2) * value
        items.append(pointed(15 - stretch, 15 + value))
    return Instance(
        name="k1n_cmptg",
        structure=star_graph(n),
        rep=Representation("cmptg", tuple(items)),
        expected_verdicts=(("cmptg", True),),
    )


def _cn_50mtg(n: int) -> Instance:
    """Chordless cycle with a half-length-tolerance representation."""
    if n < 3:
        raise InputError(f"cn_50mtg needs n >= 3, got {n}")
    intervals = _cn_intervals(n)
    items = tuple(ToleranceInterval(iv, iv.length / 2) for iv in intervals)
    return Instance(
        name="cn_50mtg",
        structure=cycle_graph(n),
        rep=Representation("fifty_mtg", items),
        expected_verdicts=(("fifty_mtg", True),),
    )


def _cn_intervals(n: int):
    half = Fraction(1, 2)
    if n == 3:
        return [Interval(Fraction(1), Fraction(2))] * 3
    if n == 4:
        raw = [("1", "4.6"), ("2", "4"), ("2.9", "4.9"), ("2.7", "6.3")]
        return [Interval(parse_rational(a), parse_rational(b)) for a, b in raw]
    if n == 5:
        raw = [(10, 30), (16, 28), (18, 24), (15, 21), (9, 21)]
        return [Interval(Fraction(a), Fraction(b)) for a, b in raw]
    one = Fraction(1)
    out = [Interval(Fraction(2 - n), Fraction(n)), Interval(one, Fraction(n))]
    if n % 2 == 0:
        k = n // 2
        for i in range(3, k + 1):
            out.append(Interval(one, one + Fraction(k - 1) / Fraction(2) ** (i - 4)))
        spread = Fraction(k - 1) / Fraction(2) ** (k - 3)
        out.append(Interval(one - spread, one + spread))
        for j in range(k + 2, n + 1):
            out.append(Interval(one - Fraction(k - 1) / Fraction(2) ** (n - j - 2), one))
    else:
        k = (n + 1) // 2
        for i in range(3, k + 1):
            out.append(Interval(one, one + Fraction(n - 2) / Fraction(2) ** (i - 3)))
        spread = Fraction(3 * n - 6) / Fraction(2) ** (k - 1)
        out.append(Interval(one - spread, one + spread))
        for j in range(k + 2, n + 1):
            out.append(Interval(one - Fraction(3 * n - 6) / Fraction(2) ** (n + 1 - j), one))
    assert len(out) == n
    return out


def _c6bar_50mtg() -> Instance:
    raw = [
        ("0", "20"),
        ("12", "24"),
        ("0", "22"),
        ("9.5", "19.5"),
        ("7.5", "30.5"),
        ("10.5", "21.5"),
    ]
    items = tuple(tolerant(a, b) for a, b in raw)
    return Instance(
        name="c6bar_50mtg",
        structure=complement_graph(cycle_graph(6)),
        rep=Representation("fifty_mtg", items),
        expected_verdicts=(("fifty_mtg", True), ("cmptg", False)),
    )


def _c4_umtg() -> Instance:
    bounds = [(1, 5), (2, 6), (3, 7), (4, 8)]
    tolerances = [1, 3, 3, 1]
    items = tuple(
        ToleranceInterval(Interval(Fraction(a), Fraction(b)), Fraction(t))
        for (a, b), t in zip(bounds, tolerances)
    )
    return Instance(
        name="c4_umtg",
        structure=cycle_graph(4),
        rep=Representation("unit_max_tolerance", items),
        expected_verdicts=(("unit_max_tolerance", True), ("interval_graph", False)),
    )


def _c4_50() -> Instance:
    raw = [("1", "4.6"), ("2", "4"), ("2.9", "4.9"), ("2.7", "6.3")]
    items = tuple(tolerant(a, b) for a, b in raw)
    return Instance(
        name="c4_50",
        structure=cycle_graph(4),
        rep=Representation("fifty_mtg", items),
        expected_verdicts=(("fifty_mtg", True), ("interval_graph", False)),
    )


def _k13_50() -> Instance:
    raw = [("1.9", "6.1"), ("0", "8"), ("1.8", "4.3"), ("3.6", "5.9")]
    items = tuple(tolerant(a, b) for a, b in raw)
    return Instance(
        name="k13_50",
        structure=star_graph(3),
        rep=Representation("fifty_mtg", items),
        expected_verdicts=(("fifty_mtg", True), ("proper_interval", False)),
    )


def _k1n_interval(n: int) -> Instance:
    """Star as a plain interval graph: hub [1,2n], pendant i gets [2i-1,2i]."""
    if n < 1:
        raise InputError(f"k1n_interval needs n >= 1, got {n}")
    items = [Interval(Fraction(1), Fraction(2 * n))]
    for i in range(1, n + 1):
        items.append(Interval(Fraction(2 * i - 1), Fraction(2 * i)))
    return Instance(
        name="k1n_interval",
        structure=star_graph(n),
        rep=Representation("interval", tuple(items)),
        expected_verdicts=(("interval_graph", True),),
    )


def _claw_edges():
    # Hub 0, pendants 1..3; vertices 4 and 5 see the whole claw.
    edges = [(0, 1), (0, 2), (0, 3)]
    edges += [(v, 4) for v in range(4)]
    edges += [(v, 5) for v in range(4)]
    return edges


def _claw_plus_two() -> Instance:
    return Instance(
        name="claw_plus_two",
        structure=Graph.from_edges(6, _claw_edges()),
        expected_verdicts=(("cmptg", False),),
    )


def _claw_plus_two_minus_u() -> Instance:
    """The previous graph with one of the two full-view vertices removed;
    this one admits a central representation."""
    edges = [(0, 1), (0, 2), (0, 3)] + [(v, 4) for v in range(4)]
    raw = [("1", "29"), ("-13", "15"), ("3", "15"), ("11", "15"), ("1", "21")]
    items = tuple(pointed(a, b) for a, b in raw)
    return Instance(
        name="claw_plus_two_minus_u",
        structure=Graph.from_edges(5, edges),
        rep=Representation("cmptg", items),
        expected_verdicts=(("cmptg", True),),
    )


def _maehara_g1() -> Instance:
    arcs = [(0, 1), (1, 2), (1, 3), (2, 0), (2, 1), (3, 2)]
    return Instance(
        name="maehara_g1",
        structure=Digraph.from_arcs(4, arcs),
        expected_verdicts=(("icd", True), ("cicd", False)),
    )


_OD11_ROWS = (
    "11000000",
    "11111000",
    "00110000",
    "01111100",
    "01111110",
    "00001100",
    "00111111",
    "00000011",
)

_OD11_LABELS = ("2", "3", "6", "6.9", "8", "8.1", "12", "14")

_OD11_INTERVALS = (
    ("0", "4"),
    ("-2", "8"),
    ("5", "7"),
    ("2.4", "11.4"),
    ("3", "13"),
    ("7.6", "8.6"),
    ("6", "18"),
    ("11", "17"),
)


def od11_matrix_rows():
    """The frozen augmented adjacency rows of the od11 digraph."""
    return list(_OD11_ROWS)


def _od11() -> Instance:
    arcs = [
        (i, j)
        for i, row in enumerate(_OD11_ROWS)
        for j, ch in enumerate(row)
        if i != j and ch == "1"
    ]
    labels = tuple(parse_rational(x) for x in _OD11_LABELS)
    items = tuple(pointed(a, b) for a, b in _OD11_INTERVALS)
    return Instance(
        name="od11",
        structure=Digraph.from_arcs(8, arcs),
        rep=Representation("cicd", items),
        labeling=labels,
        expected_verdicts=(("icd", True), ("cicd", True)),
    )
