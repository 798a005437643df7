from fractions import Fraction

import pytest
from hypothesis import strategies as st

from intcurv.graph import Graph, all_pairs_distances


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random spanning tree plus a random subset of the remaining pairs."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if others:
        edges |= set(draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others))))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def graphs_with_pair(draw, max_n=8):
    g = draw(connected_graphs(max_n=max_n))
    x = draw(st.integers(0, g.n - 1))
    y = draw(st.integers(0, g.n - 2))
    if y >= x:
        y += 1
    return g, x, y


def measures(n):
    """Strategy for rational probability measures on vertices 0..n-1."""

    @st.composite
    def build(draw):
        support = draw(st.lists(st.integers(0, n - 1), unique=True, min_size=1, max_size=n))
        weights = draw(st.lists(st.integers(1, 7), min_size=len(support), max_size=len(support)))
        total = sum(weights)
        return {v: Fraction(w, total) for v, w in zip(support, weights)}

    return build()


alphas = st.sampled_from([Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4)])


@pytest.fixture
def metric():
    return all_pairs_distances


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
