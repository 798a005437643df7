from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from intcurv import curvature
from intcurv.curvature import (
    curvature_profile,
    idleness_function,
    integral_curvature,
    integral_curvature_alpha,
    kappa_alpha,
    kappa_lly,
    rho,
    rho_alpha,
)
from intcurv.errors import AlphaOutOfRange, NoStabilization, SameVertex
from intcurv.graph import (
    Graph,
    all_pairs_distances,
    binary_tree_graph,
    complete_graph,
    cycle_graph,
    dumbbell_graph,
    path_graph,
    pendant_hexagon_graph,
)
from intcurv.transport import brute_force_dual, lazy_walk_measure

from conftest import alphas, connected_graphs, graphs_with_pair


def lly_by_enumeration(g, dm, x, y):
    """Idleness value deep inside the terminal linear piece, via the enumerated dual."""
    gap = F(1, 64 * (max(g.degree(x), g.degree(y)) + 1))
    a = 1 - gap
    w = brute_force_dual(g, dm, lazy_walk_measure(g, x, a), lazy_walk_measure(g, y, a))
    return (1 - w / dm(x, y)) / gap


def edge_profile(g):
    return curvature_profile(g, all_pairs_distances(g)).edges


def test_single_edge_ollivier():
    g = path_graph(2)
    dm = all_pairs_distances(g)
    # both walks jump to the opposite endpoint, so the measures sit distance 1 apart
    assert kappa_alpha(g, dm, 0, 1, 0) == 0
    assert kappa_alpha(g, dm, 0, 1, F(3, 4)) == F(1, 2)


def test_kappa_alpha_preconditions():
    g = path_graph(3)
    dm = all_pairs_distances(g)
    with pytest.raises(AlphaOutOfRange):
        kappa_alpha(g, dm, 0, 1, 1)
    with pytest.raises(SameVertex):
        kappa_alpha(g, dm, 1, 1, 0)
    with pytest.raises(SameVertex):
        kappa_lly(g, dm, 2, 2)


def test_idleness_single_edge():
    g = path_graph(2)
    hs = idleness_function(g, all_pairs_distances(g), 0, 1, [F(0), F(1, 2), F(3, 4), F(7, 8)])
    assert [h for _, h in hs] == [0, 2, 2, 2]


def test_idleness_path_endpoints():
    g = path_graph(3)
    dm = all_pairs_distances(g)
    [(a, h)] = idleness_function(g, dm, 0, 2, [0])
    assert a == 0 and h == kappa_alpha(g, dm, 0, 2, 0) == 1


def test_lly_single_edge():
    g = path_graph(2)
    assert kappa_lly(g, all_pairs_distances(g), 0, 1) == 2


def test_lly_path_seven():
    prof = edge_profile(path_graph(7))
    assert prof[0, 1] == prof[5, 6] == 1
    assert all(prof[i, i + 1] == 0 for i in range(1, 5))


def test_lly_dumbbell_five():
    g = dumbbell_graph(5)
    dm = all_pairs_distances(g)
    assert kappa_lly(g, dm, 1, 2) == F(5, 4)
    assert kappa_lly(g, dm, 0, 3) == F(17, 20)
    assert kappa_lly(g, dm, 0, 5) == F(-6, 5)


@pytest.mark.parametrize("m", range(3, 8))
def test_lly_dumbbell_closed_forms(m):
    prof = edge_profile(dumbbell_graph(m))
    assert prof[1, 2] == prof[m + 1, m + 2] == F(m, m - 1)
    assert prof[0, 1] == prof[m, m + 1] == F((m - 1) ** 2 + 1, m * (m - 1))
    assert prof[0, m] == F(-2 * (m - 2), m)


def test_profile_binary_tree_two():
    g = binary_tree_graph(2)
    for (u, v), k in edge_profile(g).items():
        assert k == (F(2, 3) if 1 in (g.degree(u), g.degree(v)) else F(-2, 3))


def test_profile_complete_five():
    assert set(edge_profile(complete_graph(5)).values()) == {F(5, 4)}


def test_profile_pendant_hexagon():
    prof = edge_profile(pendant_hexagon_graph())
    assert all(prof[i, i + 6] == F(2, 3) for i in range(6))
    assert all(k == F(-2, 3) for (u, v), k in prof.items() if v < 6)


def test_profile_order_and_coverage():
    g = dumbbell_graph(4)
    prof = curvature_profile(g, all_pairs_distances(g))
    assert list(prof.edges) == g.edges()
    assert prof.min == F(-1) and prof.max == F(4, 3)
    assert prof.thresholds() == sorted(set(prof.edges.values()))


def test_binary_tree_one_is_a_star():
    g = binary_tree_graph(1)
    assert set(edge_profile(g).values()) == {F(2, 3)}


def test_cycle_values():
    # C_4 and C_5 are classical: 1 and 1/2 on every edge; C_n, n >= 6, is flat
    assert set(edge_profile(cycle_graph(4)).values()) == {1}
    assert set(edge_profile(cycle_graph(5)).values()) == {F(1, 2)}
    assert set(edge_profile(cycle_graph(7)).values()) == {0}


@pytest.mark.parametrize("kappa0, kappa, want", [(1, 1, 0), (1, 0, 1), (F(2, 3), F(-2, 3), F(4, 3)), (0, 5, 0)])
def test_rho(kappa0, kappa, want):
    assert rho(kappa0, kappa) == want


def test_rho_alpha():
    assert rho_alpha(2, F(1, 2), 1) == 0
    assert rho_alpha(2, F(1, 2), F(1, 4)) == F(3, 4)
    with pytest.raises(AlphaOutOfRange):
        rho_alpha(1, 1, 0)


def test_integral_examples():
    g = path_graph(7)
    assert integral_curvature(g, curvature_profile(g, all_pairs_distances(g)), 1).value == 4
    g = dumbbell_graph(5)
    i = integral_curvature(g, curvature_profile(g, all_pairs_distances(g)), F(17, 20))
    assert i.value == F(41, 20) == F(3 * 25 - 40 + 6, 20)
    assert i.kind == "lly"
    g = binary_tree_graph(3)
    assert integral_curvature(g, curvature_profile(g, all_pairs_distances(g)), F(2, 3)).value == 8


def test_integral_alpha_kind():
    g = path_graph(2)
    i = integral_curvature_alpha(g, all_pairs_distances(g), 2, F(1, 2))
    assert i.value == 0 and i.kind == "alpha" and i.alpha == F(1, 2)


def test_no_stabilization_is_loud(monkeypatch):
    g = path_graph(3)
    dm = all_pairs_distances(g)
    # a fake κ_α whose idleness keeps growing towards 1
    monkeypatch.setattr(curvature, "kappa_alpha", lambda g, dm, x, y, a: (1 - a) * (2 - (1 - a)))
    with pytest.raises(NoStabilization):
        kappa_lly(g, dm, 0, 1)


@settings(max_examples=40, deadline=None)
@given(graphs_with_pair(max_n=7))
def test_lly_matches_enumerated_dual_deep_in_linear_piece(case):
    g, x, y = case
    dm = all_pairs_distances(g)
    assert kappa_lly(g, dm, x, y) == lly_by_enumeration(g, dm, x, y)


@st.composite
def trees(draw, max_n=12):
    n = draw(st.integers(2, max_n))
    return Graph.from_edges(n, [(draw(st.integers(0, i - 1)), i) for i in range(1, n)])


@settings(max_examples=40, deadline=None)
@given(trees())
def test_tree_edges_follow_degree_formula(g):
    # known closed form for trees: 2/d_x + 2/d_y - 2
    for (u, v), k in edge_profile(g).items():
        assert k == F(2, g.degree(u)) + F(2, g.degree(v)) - 2


@settings(max_examples=40, deadline=None)
@given(graphs_with_pair(max_n=8), alphas)
def test_upper_bound_on_alpha_curvature(case, alpha):
    g, x, y = case
    dm = all_pairs_distances(g)
    assert kappa_alpha(g, dm, x, y, alpha) <= (1 - alpha) * F(2, dm(x, y))


@settings(max_examples=40, deadline=None)
@given(graphs_with_pair(max_n=8))
def test_idleness_nondecreasing(case):
    g, x, y = case
    dm = all_pairs_distances(g)
    hs = [h for _, h in idleness_function(g, dm, x, y, [0, F(1, 4), F(1, 3), F(1, 2), F(3, 4), F(7, 8), F(15, 16)])]
    assert hs == sorted(hs)
    assert hs[-1] <= kappa_lly(g, dm, x, y)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=8), st.fractions(min_value=-2, max_value=3, max_denominator=12))
def test_limit_consistency(g, kappa0):
    dm = all_pairs_distances(g)
    prof = curvature_profile(g, dm)
    a = prof.stable_alpha
    assert integral_curvature_alpha(g, dm, kappa0, a).value / (1 - a) == integral_curvature(g, prof, kappa0).value


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=8), st.fractions(min_value=-2, max_value=3, max_denominator=12))
def test_integral_vanishes_iff_threshold_met(g, kappa0):
    prof = curvature_profile(g, all_pairs_distances(g))
    i = integral_curvature(g, prof, kappa0)
    assert i.value >= 0
    assert (i.value == 0) == (prof.min >= kappa0)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=8), st.fractions(min_value=-2, max_value=3, max_denominator=12), alphas)
def test_alpha_integral_vanishes_iff_threshold_met(g, kappa0, alpha):
    dm = all_pairs_distances(g)
    i = integral_curvature_alpha(g, dm, kappa0, alpha)
    worst = min(kappa_alpha(g, dm, u, v, alpha) for u, v in g.edges())
    assert i.value >= 0
    assert (i.value == 0) == (worst >= (1 - alpha) * kappa0)
