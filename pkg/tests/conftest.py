import itertools

import pytest
from hypothesis import strategies as st

from sizeramsey.graph import Graph
from sizeramsey.search import connected_classes


@st.composite
def graphs(draw, max_vertices=8, max_edges=14, min_edges=0):
    nv = draw(st.integers(2, max_vertices))
    pairs = list(itertools.combinations(range(nv), 2))
    hi = min(max_edges, len(pairs))
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=min(min_edges, hi), max_size=hi, unique=True))
    return Graph(nv, chosen)


@pytest.fixture(scope="session")
def corpus9():
    """Every connected graph with at most 9 edges, one per class."""
    return [g for m in range(1, 10) for g in connected_classes(m)]


@pytest.fixture(scope="session")
def corpus8(corpus9):
    return [g for g in corpus9 if g.edge_count <= 8]


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
