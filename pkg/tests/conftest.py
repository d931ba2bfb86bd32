import pytest
from hypothesis import strategies as st

from blockstable.explosion import descriptor_of
from blockstable.graph import LabeledGraph, pendant_triangle_graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def tri():
    return pendant_triangle_graph()


@pytest.fixture
def tri_descriptor():
    return descriptor_of(pendant_triangle_graph())


@st.composite
def graphs(draw, min_n=1, max_n=50, max_extra=None):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return LabeledGraph(1)
    pair = st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(pair, max_size=max_extra if max_extra is not None else 2 * n))
    return LabeledGraph.from_edges(n, edges)


@st.composite
def connected_graphs(draw, min_n=1, max_n=12, max_extra=None):
    """A random spanning tree under a random labeling, plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return LabeledGraph(1)
    perm = draw(st.permutations(range(1, n + 1)))
    edges = [(perm[v], perm[draw(st.integers(0, v - 1))]) for v in range(1, n)]
    pair = st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] != e[1])
    edges += draw(st.lists(pair, max_size=max_extra if max_extra is not None else n))
    return LabeledGraph.from_edges(n, edges)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
