import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sizeramsey.graph import Graph, complete_graph, cycle_graph, k33_minus_edge, path_graph
from sizeramsey.patterns import (
    C3,
    C4,
    P3,
    InstanceTooLarge,
    TargetPattern,
    blue_extension_ok,
    contains_target,
    maximal_target_free_sets,
)

from .conftest import graphs
from .oracles import brute_contains, brute_maximal_free_sets, random_graph

TARGETS = [P3, C3, C4, TargetPattern.path(4), TargetPattern.path(5), TargetPattern.cycle(5)]


def test_parse_targets():
    assert TargetPattern.parse("P3") == P3
    assert TargetPattern.parse("c4") == C4
    assert str(TargetPattern.parse("C_5")) == "C5"
    for bad in ("Q3", "P", "C2", "P1"):
        with pytest.raises(ValueError):
            TargetPattern.parse(bad)


def test_contains_target_examples():
    assert brute_contains(k33_minus_edge(), "cycle", 4)
    assert contains_target(k33_minus_edge(), C4)
    assert not contains_target(Graph(6, [(0, 1), (2, 3), (4, 5)]), P3)
    assert not contains_target(cycle_graph(4), C3)
    assert contains_target(Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]), C3)


def test_subgraph_not_induced():
    # K4 has C4 as a (non-induced) subgraph
    assert contains_target(complete_graph(4), C4)
    assert contains_target(complete_graph(5), TargetPattern.cycle(5))
    assert not contains_target(complete_graph(4), TargetPattern.cycle(5))


@settings(max_examples=200, deadline=None)
@given(graphs(max_vertices=7, max_edges=12), st.sampled_from(TARGETS))
def test_contains_agrees_with_naive_embedding(g, h):
    assert contains_target(g, h) == brute_contains(g, h.kind, h.order)


def test_blue_extension_examples():
    c4 = cycle_graph(4)
    e0 = c4.edge_index(0, 1)
    opposite = c4.edge_index(2, 3)
    adjacent = c4.edge_index(1, 2)
    assert blue_extension_ok(c4, 1 << e0, opposite, P3)
    assert not blue_extension_ok(c4, 1 << e0, adjacent, P3)
    c3 = cycle_graph(3)
    assert not blue_extension_ok(c3, 0b011, 2, C3)


def test_blue_extension_randomised():
    rng = random.Random(11)
    checked = 0
    for _ in range(600):
        g = random_graph(rng, 8, 14)
        h = rng.choice(TARGETS)
        order = list(range(g.edge_count))
        rng.shuffle(order)
        blue = 0
        for e in order:
            ok = blue_extension_ok(g, blue, e, h)
            assert ok == (not contains_target(g, h, blue | (1 << e)))
            checked += 1
            if ok:
                blue |= 1 << e
    assert checked > 1000


def test_maximal_sets_examples():
    sets = sorted(s.bits for s in maximal_target_free_sets(cycle_graph(3), P3))
    assert sets == [1, 2, 4]
    assert [s.bits for s in maximal_target_free_sets(cycle_graph(4), C3)] == [0b1111]
    # K4 versus C3: brute force finds the three 4-cycles and the four 3-stars
    k4 = complete_graph(4)
    expected = brute_maximal_free_sets(k4, "cycle", 3)
    assert expected == [0b000111, 0b011001, 0b011110, 0b101010, 0b101101, 0b110011, 0b110100]
    got = sorted(s.bits for s in maximal_target_free_sets(k4, C3))
    assert got == expected
    assert sorted(len(s) for s in maximal_target_free_sets(k4, C3)) == [3, 3, 3, 3, 4, 4, 4]


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=6, max_edges=9), st.sampled_from([P3, C3, C4, TargetPattern.path(4)]))
def test_maximal_sets_match_brute_force(g, h):
    got = [s.bits for s in maximal_target_free_sets(g, h)]
    assert len(got) == len(set(got))
    assert sorted(got) == brute_maximal_free_sets(g, h.kind, h.order)


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=8, max_edges=13), st.sampled_from(TARGETS))
def test_maximal_sets_are_free_and_maximal(g, h):
    for s in maximal_target_free_sets(g, h):
        assert not contains_target(g, h, s.bits)
        for e in range(g.edge_count):
            if e not in s:
                assert contains_target(g, h, s.bits | (1 << e))


def test_maximal_sets_guard():
    g = complete_graph(9)  # 36 edges
    with pytest.raises(InstanceTooLarge, match="instance too large"):
        next(maximal_target_free_sets(g, P3))


def test_long_path_targets():
    assert contains_target(path_graph(6), TargetPattern.path(6))
    assert not contains_target(path_graph(6), TargetPattern.path(7))
    assert contains_target(cycle_graph(7), TargetPattern.cycle(7))
    assert not contains_target(cycle_graph(7), TargetPattern.cycle(6))
