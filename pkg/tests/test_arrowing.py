import itertools
import random

import pytest

from sizeramsey.arrowing import (
    EdgeColouring,
    has_good_colouring,
    min_red_matching_oracle,
    naive_arrowing_oracle,
    verify_colouring,
)
from sizeramsey.graph import Graph, cycle_graph, k33_minus_edge, path_graph
from sizeramsey.patterns import C3, C4, P3, InstanceTooLarge, TargetPattern

from .oracles import brute_arrows, random_graph

TARGETS = [P3, C3, C4, TargetPattern.path(4), TargetPattern.cycle(5)]
TWO_TRIANGLES = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)])


@pytest.mark.parametrize(
    "g, n, h, expected",
    [
        (cycle_graph(4), 2, P3, True),
        (k33_minus_edge(), 2, C4, True),
        (path_graph(4), 2, P3, False),
        (cycle_graph(3), 1, C3, True),
        (Graph(2, [(0, 1)]), 1, C3, False),
        (TWO_TRIANGLES, 2, C3, True),
    ],
)
def test_examples_both_routes(g, n, h, expected):
    assert has_good_colouring(g, n, h).arrows is expected
    assert naive_arrowing_oracle(g, n, h).arrows is expected


def test_frozen_values_from_brute_force():
    # fully independent enumeration (own matching and containment code)
    assert brute_arrows(path_graph(4), 2, "path", 3) is False
    assert brute_arrows(TWO_TRIANGLES, 2, "cycle", 3) is True


def test_p4_witness():
    v = has_good_colouring(path_graph(4), 2, P3)
    assert v.witness.blue == 0b101
    assert v.witness.lines() == ["0-1:blue", "1-2:red", "2-3:blue"]
    assert verify_colouring(v.witness, 2, P3).good


def test_verify_colouring_examples():
    c4 = cycle_graph(4)
    red = verify_colouring(EdgeColouring(c4, 0), 2, P3)
    assert red.status == "red_violation" and len(red.matching) == 2
    assert verify_colouring(EdgeColouring(c4, 0b1111), 2, P3).status == "blue_violation"
    assert verify_colouring(EdgeColouring(path_graph(4), 0b101), 2, P3).status == "good"


def test_preconditions():
    with pytest.raises(ValueError):
        has_good_colouring(cycle_graph(4), 0, P3)
    big = Graph(9, list(itertools.combinations(range(9), 2))[:31])
    with pytest.raises(InstanceTooLarge):
        has_good_colouring(big, 2, P3)
    with pytest.raises(InstanceTooLarge):
        naive_arrowing_oracle(Graph(8, list(itertools.combinations(range(8), 2))[:19]), 2, P3)


def test_random_oracle_equivalence():
    rng = random.Random(2024)
    for _ in range(400):
        g = random_graph(rng, 8, 12)
        h = rng.choice(TARGETS)
        nu_min = min_red_matching_oracle(g, h)
        for n in (1, 2, 3):
            v = has_good_colouring(g, n, h)
            assert v.arrows == (nu_min >= n), (g, n, h)
            if v.witness is not None:
                assert verify_colouring(v.witness, n, h).good


@pytest.mark.slow
def test_random_oracle_equivalence_up_to_14_edges():
    rng = random.Random(99)
    for _ in range(10_000):
        g = random_graph(rng, 9, 14)
        h = rng.choice(TARGETS)
        n = rng.randint(1, 4)
        assert has_good_colouring(g, n, h).arrows == naive_arrowing_oracle(g, n, h).arrows


def test_monotone_in_supergraph():
    rng = random.Random(5)
    hits = 0
    for _ in range(300):
        g = random_graph(rng, 7, 11)
        h = rng.choice([P3, C3, C4])
        n = rng.randint(1, 3)
        if not has_good_colouring(g, n, h).arrows:
            continue
        hits += 1
        non_edges = [(u, v) for u, v in itertools.combinations(range(g.vertex_count), 2)
                     if not g.has_edge(u, v)]
        if non_edges:
            bigger = Graph(g.vertex_count, list(g.edges) + [rng.choice(non_edges)])
            assert has_good_colouring(bigger, n, h).arrows
    assert hits > 20


def test_anti_monotone_in_n():
    rng = random.Random(6)
    for _ in range(300):
        g = random_graph(rng, 8, 12)
        h = rng.choice([P3, C3, C4])
        for n in (2, 3, 4):
            if has_good_colouring(g, n, h).arrows:
                assert has_good_colouring(g, n - 1, h).arrows


def test_stats_are_reported():
    v = has_good_colouring(k33_minus_edge(), 2, C4)
    assert v.stats.nodes > 0
    assert v.witness is None
