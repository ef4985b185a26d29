from collections import Counter

import pytest

from sizeramsey.arrowing import has_good_colouring
from sizeramsey.constructions import (
    FAMILIES,
    ConstructionFamily,
    build,
    c3_value,
    c4_upper_bound,
    p3_value,
    path_upper_bound,
    upper_bound_formula,
)
from sizeramsey.decomposition import block_decompose
from sizeramsey.graph import canonical_form, cycle_graph, is_connected, k33_minus_edge, path_graph
from sizeramsey.patterns import C3, C4, P3, TargetPattern


def test_examples():
    g = build("c3_chain", 2)
    assert g.edge_count == 7 and is_connected(g)
    assert canonical_form(build("p3_chain", 1)) == canonical_form(path_graph(3))
    assert canonical_form(build("c4_chain", 2)) == canonical_form(k33_minus_edge())
    g = build("p3_chain", 4)
    assert g.edge_count == 9
    blocks = block_decompose(g).blocks
    assert sorted(b.size for b in blocks) == [1, 4, 4]


def test_formula_examples():
    assert path_upper_bound(3, 3) == 7
    assert p3_value(3) == 7
    assert c3_value(1) == 3
    assert c4_upper_bound(3) == 13
    assert upper_bound_formula(TargetPattern.path(3), 3) == 7
    assert upper_bound_formula(C4, 3) == 13
    assert upper_bound_formula(C3, 1) == 3


def test_formula_domain():
    with pytest.raises(ValueError):
        path_upper_bound(2, 3)
    with pytest.raises(ValueError):
        p3_value(0)
    with pytest.raises(ValueError):
        upper_bound_formula(TargetPattern.cycle(5), 2)
    with pytest.raises(ValueError):
        ConstructionFamily("k4_chain", 2)


def test_general_path_bound_matches_p3_value():
    for n in range(1, 101):
        assert path_upper_bound(3, n) == p3_value(n)


def _expected_blocks(family, n):
    """Multiset of (vertices, edges) of the blocks, as described for each family."""
    unit = {"p3_chain": (4, 4), "c4_chain": (6, 8), "c3_chain": (3, 3)}[family]
    blocks = Counter()
    if family == "c3_chain":
        blocks[unit] += n
        blocks[(2, 1)] += n - 1
        return blocks
    blocks[unit] += n // 2
    bridges = n // 2 - 1
    if n % 2:
        tail = (3, 2) if family == "p3_chain" else (4, 4)
        bridges += 1
        if family == "p3_chain":
            blocks[(2, 1)] += 2  # P3 splits into two K2 blocks
        else:
            blocks[tail] += 1
    blocks[(2, 1)] += bridges
    return blocks


@pytest.mark.parametrize("family", FAMILIES)
def test_edge_counts_connectivity_and_blocks(family):
    for n in range(1, 21):
        fam = ConstructionFamily(family, n)
        g = build(fam)
        assert g.edge_count == upper_bound_formula(fam.target, n)
        assert is_connected(g)
        assert min(g.degrees()) >= 1
        got = Counter((len(b.vertices), b.size) for b in block_decompose(g).blocks)
        assert got == _expected_blocks(family, n), (family, n)


@pytest.mark.parametrize("family", FAMILIES)
def test_constructions_arrow(family):
    for n in range(1, 21):
        fam = ConstructionFamily(family, n)
        g = build(fam)
        if g.edge_count > 18:
            break
        assert has_good_colouring(g, n, fam.target).arrows, (family, n)


def test_constructions_are_tight_for_one_less():
    # the chain for n does not arrow for n+1 (sanity: the bound is not trivially loose)
    assert not has_good_colouring(build("c3_chain", 2), 3, C3).arrows
    assert not has_good_colouring(build("p3_chain", 2), 3, P3).arrows


def test_components_of_k33_minus_edge():
    g = k33_minus_edge()
    assert g.edge_count == 8
    assert not g.has_edge(0, 3)
    assert cycle_graph(4).edge_count == 4
