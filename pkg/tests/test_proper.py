"""Proper interval recognition: sweep recognizer vs the factorial oracle."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catchtol.core import Graph, cycle_graph, path_graph, star_graph
from catchtol.proper import (
    NotProperIntervalError,
    neighborhoods_consecutive,
    proper_interval_ordering,
    proper_interval_ordering_bruteforce,
    unit_positions,
)
from conftest import random_graph, random_unit_interval_graph


def test_known_small_graphs():
    assert proper_interval_ordering(path_graph(4)) is not None
    assert proper_interval_ordering(star_graph(3)) is None
    assert proper_interval_ordering(cycle_graph(4)) is None
    assert proper_interval_ordering(Graph(0, frozenset())) == ()


def test_all_graphs_up_to_five_match_bruteforce():
    for n in range(6):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
            g = Graph.from_edges(n, edges)
            fast = proper_interval_ordering(g)
            slow = proper_interval_ordering_bruteforce(g)
            assert (fast is None) == (slow is None), sorted(edges)
            if fast is not None:
                assert neighborhoods_consecutive(g, fast)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7), st.integers(0, 10**6), st.floats(0.1, 0.9))
def test_random_graphs_match_bruteforce(n, seed, p):
    g = random_graph(random.Random(seed), n, p)
    fast = proper_interval_ordering(g)
    slow = proper_interval_ordering_bruteforce(g)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert neighborhoods_consecutive(g, fast)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 14), st.integers(0, 10**6))
def test_unit_interval_graphs_always_recognized(n, seed):
    g = random_unit_interval_graph(random.Random(seed), n)
    ordering = proper_interval_ordering(g)
    assert ordering is not None
    centers = unit_positions(g, ordering)
    place = {v: k for k, v in enumerate(ordering)}
    for i in range(n):
        for j in range(i + 1, n):
            gap = abs(centers[place[i]] - centers[place[j]])
            if g.has_edge(i, j):
                assert gap < 1
            else:
                assert gap > 1


def test_unit_positions_rejects_bad_ordering():
    with pytest.raises(NotProperIntervalError):
        unit_positions(cycle_graph(4), (0, 1, 2, 3))
