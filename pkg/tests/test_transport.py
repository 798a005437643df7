from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from intcurv.errors import AlphaOutOfRange, InvalidParameter, TooLarge
from intcurv.graph import all_pairs_distances, path_graph, star_graph
from intcurv.transport import (
    ProbabilityMeasure,
    brute_force_dual,
    check_solution,
    lazy_walk_measure,
    wasserstein,
)

from conftest import connected_graphs, measures


def lp_distance(dm, m1, m2, n):
    """Float LP over the n*n coupling matrix; an independent third route."""
    cost = np.array([[dm(u, v) for v in range(n)] for u in range(n)], dtype=float).ravel()
    rows = []
    rhs = []
    for u in range(n):
        a = np.zeros((n, n))
        a[u, :] = 1
        rows.append(a.ravel())
        rhs.append(float(m1[u]))
    for v in range(n):
        a = np.zeros((n, n))
        a[:, v] = 1
        rows.append(a.ravel())
        rhs.append(float(m2[v]))
    res = linprog(cost, A_eq=np.array(rows), b_eq=np.array(rhs), bounds=(0, None), method="highs")
    assert res.success
    return res.fun


def test_measure_validation():
    with pytest.raises(InvalidParameter):
        ProbabilityMeasure({0: F(1, 2)})
    with pytest.raises(InvalidParameter):
        ProbabilityMeasure({0: F(3, 2), 1: F(-1, 2)})
    with pytest.raises(InvalidParameter):
        ProbabilityMeasure({})


def test_lazy_walk_single_edge():
    assert lazy_walk_measure(path_graph(2), 0, F(1, 2)).support == {0: F(1, 2), 1: F(1, 2)}


def test_lazy_walk_star_center():
    assert lazy_walk_measure(star_graph(3), 0, F(0)).support == {1: F(1, 3), 2: F(1, 3), 3: F(1, 3)}


def test_lazy_walk_path_middle():
    assert lazy_walk_measure(path_graph(3), 1, F(2, 3)).support == {0: F(1, 6), 1: F(2, 3), 2: F(1, 6)}


@pytest.mark.parametrize("alpha", [F(1), F(-1, 4), F(5, 4)])
def test_lazy_walk_alpha_range(alpha):
    with pytest.raises(AlphaOutOfRange):
        lazy_walk_measure(path_graph(2), 0, alpha)


def test_identical_measures():
    g = star_graph(4)
    dm = all_pairs_distances(g)
    m = ProbabilityMeasure({0: F(1, 2), 3: F(1, 4), 4: F(1, 4)})
    sol = wasserstein(g, dm, m, m)
    assert sol.value == 0
    assert sol.coupling == {(v, v): q for v, q in m.support.items()}
    assert brute_force_dual(g, dm, m, m) == 0


def test_diracs():
    g = path_graph(6)
    dm = all_pairs_distances(g)
    sol = wasserstein(g, dm, ProbabilityMeasure.dirac(1), ProbabilityMeasure.dirac(5))
    assert sol.value == 4
    assert sol.coupling == {(1, 5): 1}


@pytest.mark.parametrize("alpha", [F(0), F(1, 4), F(1, 2), F(3, 4), F(7, 8)])
def test_single_edge_lazy_walks(alpha):
    g = path_graph(2)
    dm = all_pairs_distances(g)
    m1, m2 = lazy_walk_measure(g, 0, alpha), lazy_walk_measure(g, 1, alpha)
    value = wasserstein(g, dm, m1, m2).value
    assert value == brute_force_dual(g, dm, m1, m2) == abs(2 * alpha - 1)


def test_single_edge_three_quarters():
    g = path_graph(2)
    dm = all_pairs_distances(g)
    sol = wasserstein(g, dm, lazy_walk_measure(g, 0, F(3, 4)), lazy_walk_measure(g, 1, F(3, 4)))
    assert sol.value == F(1, 2)


def test_brute_force_examples():
    g = path_graph(2)
    dm = all_pairs_distances(g)
    assert brute_force_dual(g, dm, ProbabilityMeasure.dirac(0), ProbabilityMeasure.dirac(1)) == 1
    g = path_graph(3)
    dm = all_pairs_distances(g)
    spread = ProbabilityMeasure({0: F(1, 2), 2: F(1, 2)})
    assert brute_force_dual(g, dm, spread, ProbabilityMeasure.dirac(1)) == 1
    assert wasserstein(g, dm, spread, ProbabilityMeasure.dirac(1)).value == 1


def test_brute_force_guard():
    g = path_graph(11)
    with pytest.raises(TooLarge):
        brute_force_dual(g, all_pairs_distances(g), ProbabilityMeasure.dirac(0), ProbabilityMeasure.dirac(1))


def test_potential_is_translated_to_zero_minimum():
    g = path_graph(5)
    dm = all_pairs_distances(g)
    m1 = ProbabilityMeasure({0: F(1, 3), 4: F(2, 3)})
    m2 = ProbabilityMeasure({2: F(1)})
    sol = wasserstein(g, dm, m1, m2)
    assert min(sol.potential.values()) == 0
    assert set(sol.potential) == {0, 2, 4}
    assert check_solution(dm, m1, m2, sol) == []


def test_check_solution_detects_bad_certificate():
    g = path_graph(3)
    dm = all_pairs_distances(g)
    m1, m2 = ProbabilityMeasure.dirac(0), ProbabilityMeasure.dirac(2)
    sol = wasserstein(g, dm, m1, m2)
    bad = type(sol)(sol.value + 1, sol.coupling, sol.potential)
    assert check_solution(dm, m1, m2, bad)
    steep = type(sol)(sol.value, sol.coupling, {0: F(5), 2: F(0)})
    assert any("Lipschitz" in p for p in check_solution(dm, m1, m2, steep))


@st.composite
def transport_cases(draw, max_n=8):
    g = draw(connected_graphs(max_n=max_n))
    return g, ProbabilityMeasure(draw(measures(g.n))), ProbabilityMeasure(draw(measures(g.n)))


@settings(max_examples=80, deadline=None)
@given(transport_cases())
def test_strong_duality_against_enumeration(case):
    g, m1, m2 = case
    dm = all_pairs_distances(g)
    sol = wasserstein(g, dm, m1, m2)
    assert check_solution(dm, m1, m2, sol) == []
    assert sol.value == brute_force_dual(g, dm, m1, m2)


@settings(max_examples=40, deadline=None)
@given(transport_cases(max_n=7))
def test_matches_float_lp(case):
    g, m1, m2 = case
    dm = all_pairs_distances(g)
    assert abs(float(wasserstein(g, dm, m1, m2).value) - lp_distance(dm, m1, m2, g.n)) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(transport_cases())
def test_symmetry_and_identity(case):
    g, m1, m2 = case
    dm = all_pairs_distances(g)
    w12 = wasserstein(g, dm, m1, m2).value
    assert w12 == wasserstein(g, dm, m2, m1).value
    assert (w12 == 0) == (m1.support == m2.support)


@st.composite
def triples(draw):
    g = draw(connected_graphs(max_n=8))
    return g, *(ProbabilityMeasure(draw(measures(g.n))) for _ in range(3))


@settings(max_examples=60, deadline=None)
@given(triples())
def test_triangle_inequality(case):
    g, a, b, c = case
    dm = all_pairs_distances(g)
    w = lambda p, q: wasserstein(g, dm, p, q).value  # noqa: E731
    assert w(a, c) <= w(a, b) + w(b, c)


@settings(max_examples=40, deadline=None)
@given(transport_cases())
def test_values_are_exact_rationals(case):
    g, m1, m2 = case
    sol = wasserstein(g, all_pairs_distances(g), m1, m2)
    assert isinstance(sol.value, F)
    assert all(isinstance(q, F) for q in sol.coupling.values())
    assert all(isinstance(q, F) for q in sol.potential.values())
