"""Representation model, realization rules, and verification."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catchtol.core import (
    Digraph,
    InputError,
    complement_graph,
    complete_graph,
    cycle_graph,
    intersect_transpose,
    star_graph,
)
from catchtol.reps import (
    Interval,
    PointedInterval,
    Representation,
    ToleranceInterval,
    center_adjacent,
    center_order,
    pointed,
    realize,
    representation_from_json,
    representation_to_json,
    tied_center_pairs,
    tolerant,
    verify,
)
from conftest import random_central_rep, random_pointed_rep

F = Fraction


def test_interval_invariants():
    with pytest.raises(InputError):
        Interval(F(1), F(1))
    with pytest.raises(InputError):
        Interval(F(2), F(1))
    iv = Interval(F(-1), F(3))
    assert iv.length == 4 and iv.center == 1
    assert iv.contains(F(3)) and not iv.contains(F(4))


def test_pointed_and_tolerance_invariants():
    with pytest.raises(InputError):
        PointedInterval(Interval(F(0), F(1)), F(2))
    with pytest.raises(InputError):
        ToleranceInterval(Interval(F(0), F(1)), F(0))


def test_kind_invariants_report_index():
    good = pointed(0, 2)
    bad = PointedInterval(Interval(F(0), F(2)), F(0))
    with pytest.raises(InputError, match="item 1"):
        Representation("cmptg", (good, bad))
    with pytest.raises(InputError, match="item 1"):
        Representation(
            "unit_max_tolerance",
            (tolerant(0, 2, 1), tolerant(0, 3, 1)),
        )
    with pytest.raises(InputError, match="item 0"):
        Representation("fifty_mtg", (tolerant(0, 2, F(1, 3)),))
    with pytest.raises(InputError):
        Representation("bogus", ())


def test_realize_c4_unit_max_tolerance():
    items = tuple(
        ToleranceInterval(Interval(F(a), F(b)), F(t))
        for (a, b), t in zip([(1, 5), (2, 6), (3, 7), (4, 8)], [1, 3, 3, 1])
    )
    rep = Representation("unit_max_tolerance", items)
    assert realize(rep) == cycle_graph(4)


def test_realize_fifty_cycles():
    c4 = Representation(
        "fifty_mtg",
        (tolerant("1", "4.6"), tolerant("2", "4"), tolerant("2.9", "4.9"), tolerant("2.7", "6.3")),
    )
    assert realize(c4) == cycle_graph(4)
    c5 = Representation(
        "fifty_mtg",
        tuple(tolerant(a, b) for a, b in [(10, 30), (16, 28), (18, 24), (15, 21), (9, 21)]),
    )
    assert realize(c5) == cycle_graph(5)


def test_realize_fifty_c6_complement():
    rep = Representation(
        "fifty_mtg",
        tuple(
            tolerant(a, b)
            for a, b in [
                ("0", "20"),
                ("12", "24"),
                ("0", "22"),
                ("9.5", "19.5"),
                ("7.5", "30.5"),
                ("10.5", "21.5"),
            ]
        ),
    )
    assert realize(rep) == complement_graph(cycle_graph(6))


def test_realize_od11_catch_digraph():
    raw = [
        ("0", "4"),
        ("-2", "8"),
        ("5", "7"),
        ("2.4", "11.4"),
        ("3", "13"),
        ("7.6", "8.6"),
        ("6", "18"),
        ("11", "17"),
    ]
    rep = Representation("cicd", tuple(pointed(a, b) for a, b in raw))
    realized = realize(rep)
    assert isinstance(realized, Digraph)
    expected = {
        0: {1},
        1: {0, 2, 3, 4},
        2: {3},
        3: {1, 2, 4, 5},
        4: {1, 2, 3, 5, 6},
        5: {4},
        6: {2, 3, 4, 5, 7},
        7: {6},
    }
    for v in range(8):
        assert realized.out_neighbors(v) == frozenset(expected[v])


def test_realize_identical_central_items_complete():
    rep = Representation("cmptg", tuple(pointed(0, 2) for _ in range(4)))
    assert realize(rep) == complete_graph(4)
    assert tied_center_pairs(rep)
    with pytest.raises(InputError):
        center_order(rep)


def test_realize_interval_rule_star():
    items = [Interval(F(1), F(8))] + [Interval(F(2 * i - 1), F(2 * i)) for i in (1, 2, 3, 4)]
    rep = Representation("interval", tuple(items))
    assert realize(rep) == star_graph(4)


def test_center_adjacent_examples():
    a = Interval(F(0), F(2))
    assert center_adjacent(a, a)
    assert not center_adjacent(a, Interval(F(10), F(12)))
    assert center_adjacent(Interval(F(1), F(29)), Interval(F(-13), F(15)))


def test_verify_diff():
    rep = Representation(
        "fifty_mtg",
        tuple(
            tolerant(a, b)
            for a, b in [
                ("0", "20"),
                ("12", "24"),
                ("0", "22"),
                ("9.5", "19.5"),
                ("7.5", "30.5"),
                ("10.5", "21.5"),
            ]
        ),
    )
    assert verify(rep, complement_graph(cycle_graph(6))).ok
    result = verify(rep, cycle_graph(6))
    assert not result.ok and result.missing and result.extra
    with pytest.raises(InputError):
        verify(rep, cycle_graph(5))
    with pytest.raises(InputError):
        verify(rep, Digraph.from_arcs(6, []))


def test_json_roundtrip_and_exact_decimals():
    rep = Representation(
        "fifty_mtg", (tolerant("6.9", "8.1"),)
    )
    data = representation_to_json(rep)
    assert data["items"][0] == {"lo": "69/10", "hi": "81/10", "tolerance": "3/5"}
    assert representation_from_json(data) == rep

    decoded = representation_from_json(
        {"kind": "cmptg", "items": [{"lo": 0, "hi": "2"}]}
    )
    assert decoded.items[0].point == 1

    with pytest.raises(InputError, match="item 0"):
        representation_from_json({"kind": "cmptg", "items": [{"lo": 0}]})
    with pytest.raises(InputError, match="item 1"):
        representation_from_json(
            {"kind": "mptg", "items": [{"lo": 0, "hi": 1, "point": 0}, {"lo": 0, "hi": 1}]}
        )
    with pytest.raises(InputError):
        representation_from_json({"kind": "mptg", "items": [{"lo": 0.5, "hi": 1, "point": 1}]})
    with pytest.raises(InputError):
        representation_from_json({"kind": "nope", "items": []})


def rationals(lo=-20, hi=20):
    return st.builds(
        lambda n, d: Fraction(n, d), st.integers(lo, hi), st.integers(1, 8)
    )


@st.composite
def interval_pairs(draw):
    out = []
    for _ in range(2):
        a = draw(rationals())
        width = draw(rationals(1, 16))
        out.append(Interval(a, a + width))
    return out


@given(interval_pairs())
def test_center_adjacency_equivalences(pair):
    a, b = pair
    gap_rule = 2 * abs(b.center - a.center) <= min(a.length, b.length)
    lo_iv, hi_iv = (a, b) if a.center <= b.center else (b, a)
    endpoint_rule = hi_iv.lo <= lo_iv.center and hi_iv.center <= lo_iv.hi
    meet_lo, meet_hi = max(a.lo, b.lo), min(a.hi, b.hi)
    setwise_rule = (
        meet_lo <= a.center <= meet_hi and meet_lo <= b.center <= meet_hi
    )
    assert center_adjacent(a, b) == gap_rule == endpoint_rule == setwise_rule


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10**6))
def test_central_realize_matches_pointed_rule(n, seed):
    rep = random_central_rep(random.Random(seed), n, distinct_centers=False)
    as_mptg = Representation("mptg", rep.items)
    assert realize(rep) == realize(as_mptg)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10**6))
def test_fifty_realize_matches_max_tolerance_rule(n, seed):
    rng = random.Random(seed)
    items = []
    for _ in range(n):
        lo = Fraction(rng.randint(-20, 20), rng.choice((1, 2, 4)))
        width = Fraction(rng.randint(1, 12), rng.choice((1, 2, 4)))
        items.append(ToleranceInterval(Interval(lo, lo + width), width / 2))
    fifty = Representation("fifty_mtg", tuple(items))
    plain = Representation("max_tolerance", tuple(items))
    assert realize(fifty) == realize(plain)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10**6))
def test_pointed_realize_is_two_way_catch(n, seed):
    rep = random_pointed_rep(random.Random(seed), n)
    catch = realize(rep, rule="icd")
    assert realize(rep) == intersect_transpose(catch)
    assert all(i != j for (i, j) in catch.arcs)
