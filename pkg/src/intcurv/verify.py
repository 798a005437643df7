"""Versioned reproduction suite for the worked examples and proven laws.

``run_suite`` executes every check and returns one result per item; the CLI
``verify-paper`` prints them and exits nonzero on any failure.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bounds import (
    diameter_bound_lly,
    key_lemma_check,
    lichnerowicz_bound,
    moore_bound_auto,
    moore_obstruction,
)
from .curvature import curvature_profile, integral_curvature, kappa_alpha
from .graph import (
    Graph,
    all_pairs_distances,
    binary_tree_graph,
    complete_graph,
    dumbbell_graph,
    path_graph,
    pendant_hexagon_graph,
    random_connected_graph,
)
from .spectral import mixing_operator_check, spectrum
from .transport import ProbabilityMeasure, brute_force_dual, check_solution, wasserstein

SUITE_VERSION = "intcurv-reproduction/1"
SEED = 20240601
TOL = 1e-9

F = Fraction


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def random_corpus(count: int, max_n: int, seed: int = SEED) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng.randint(2, max_n), rng.uniform(0.1, 0.6), rng) for _ in range(count)]


def random_measure(n: int, rng: random.Random) -> ProbabilityMeasure:
    support = rng.sample(range(n), rng.randint(1, n))
    weights = [rng.randint(1, 6) for _ in support]
    total = sum(weights)
    return ProbabilityMeasure({v: F(w, total) for v, w in zip(support, weights)})


def _fail(msgs: list[str], limit: int = 3) -> str:
    return "; ".join(msgs[:limit]) + (f" (+{len(msgs) - limit} more)" if len(msgs) > limit else "")


def check_path_family() -> CheckResult:
    bad = []
    for n in range(3, 11):
        g = path_graph(n)
        dm = all_pairs_distances(g)
        prof = curvature_profile(g, dm)
        for (u, v), k in prof.edges.items():
            want = 1 if g.degree(u) == 1 or g.degree(v) == 1 else 0
            if k != want:
                bad.append(f"P_{n} edge {(u, v)}: {k} != {want}")
        integral = integral_curvature(g, prof, 1).value
        bound = diameter_bound_lly(1, integral)
        if integral != n - 3 or bound != n - 1 or dm.diameter != n - 1:
            bad.append(f"P_{n}: I={integral}, bound={bound}, diam={dm.diameter}")
    return CheckResult("path family P_3..P_10", not bad, _fail(bad) or "κ, I=n-3 and sharp bound n-1 reproduced")


def check_dumbbell_family() -> CheckResult:
    bad = []
    for m in range(3, 7):
        g = dumbbell_graph(m)
        dm = all_pairs_distances(g)
        prof = curvature_profile(g, dm)
        inner, spoke, bridge = F(m, m - 1), F((m - 1) ** 2 + 1, m * (m - 1)), F(-2 * (m - 2), m)
        for (u, v), k in prof.edges.items():
            if (u, v) == (0, m):
                want = bridge
            elif u in (0, m):
                want = spoke
            else:
                want = inner
            if k != want:
                bad.append(f"m={m} edge {(u, v)}: {k} != {want}")
        integral = integral_curvature(g, prof, spoke).value
        bound = diameter_bound_lly(spoke, integral)
        if integral != F(3 * m * m - 8 * m + 6, m * (m - 1)) or bound != 4 or dm.diameter != 3:
            bad.append(f"m={m}: I={integral}, bound={bound}, diam={dm.diameter}")
    return CheckResult("dumbbell family m=3..6", not bad, _fail(bad) or "three curvature classes, I and bound 4 reproduced")


def check_binary_tree_family() -> CheckResult:
    bad = []
    notes = []
    for m in range(1, 5):
        g = binary_tree_graph(m)
        dm = all_pairs_distances(g)
        prof = curvature_profile(g, dm)
        for (u, v), k in prof.edges.items():
            want = F(2, 3) if g.degree(u) == 1 or g.degree(v) == 1 else F(-2, 3)
            if k != want:
                bad.append(f"T_{m} edge {(u, v)}: {k} != {want}")
        integral = integral_curvature(g, prof, F(2, 3)).value
        bound = diameter_bound_lly(F(2, 3), integral)
        if integral != F(8, 3) * (F(2) ** (m - 1) - 1) or bound != 2 ** (m + 1) - 1:
            bad.append(f"T_{m}: I={integral}, bound={bound}")
        if dm.diameter != max(2 * m, 1) or g.n != 2 ** (m + 1) or g.num_edges != 2 ** (m + 1) - 1:
            bad.append(f"T_{m}: shape n={g.n}, |E|={g.num_edges}, diam={dm.diameter}")
        if m == 1:
            notes.append(f"T_1 edge curvatures {sorted(set(map(str, prof.edges.values())))}, I={integral}, bound={bound}")
    return CheckResult("binary tree family m=1..4", not bad, _fail(bad) or "; ".join(notes))


def check_pendant_hexagon() -> CheckResult:
    g = pendant_hexagon_graph()
    dm = all_pairs_distances(g)
    prof = curvature_profile(g, dm)
    integral = integral_curvature(g, prof, F(2, 3)).value
    bound = diameter_bound_lly(F(2, 3), integral)
    ok = integral == 8 and bound == 15 and bound > g.n - 1
    return CheckResult("pendant hexagon", ok, f"I={integral}, bound={bound}, n-1={g.n - 1}")


def check_lichnerowicz_equality() -> CheckResult:
    bad = []
    for g, kappa in ((path_graph(2), F(2)), (complete_graph(5), F(5, 4))):
        dm = all_pairs_distances(g)
        prof = curvature_profile(g, dm)
        integral = integral_curvature(g, prof, kappa).value
        lam1 = spectrum(g).lambda1
        bound = lichnerowicz_bound(kappa, integral)
        if set(prof.edges.values()) != {kappa} or integral != 0 or abs(lam1 - float(kappa)) > TOL:
            bad.append(f"n={g.n}: κ={set(prof.edges.values())}, I={integral}, λ1={lam1}")
        if not (lam1 + TOL >= bound and abs(lam1 - float(bound)) <= TOL):
            bad.append(f"n={g.n}: λ1={lam1} vs bound {bound}")
    return CheckResult("Lichnerowicz equality K_2, K_5", not bad, _fail(bad) or "λ1 = κ0 within 1e-9 for K_2 and K_5")


def check_moore_obstruction() -> CheckResult:
    value = moore_obstruction(57)
    return CheckResult("Moore obstruction d_M=57", value == F(2, 57), f"threshold {value}")


def check_duality(count: int = 100, max_n: int = 8) -> CheckResult:
    rng = random.Random(SEED + 1)
    bad = []
    for idx, g in enumerate(random_corpus(count, max_n, SEED + 2)):
        dm = all_pairs_distances(g)
        m1, m2 = random_measure(g.n, rng), random_measure(g.n, rng)
        sol = wasserstein(g, dm, m1, m2)
        problems = check_solution(dm, m1, m2, sol)
        oracle = brute_force_dual(g, dm, m1, m2)
        if problems or oracle != sol.value:
            bad.append(f"graph {idx}: W={sol.value}, oracle={oracle}, {problems}")
    return CheckResult(f"duality on {count} random graphs", not bad, _fail(bad) or "primal = brute-force dual, certificates valid")


def check_curvature_laws(count: int = 50, max_n: int = 10, draws: int = 100) -> CheckResult:
    grid = [F(0), F(1, 4), F(1, 2), F(3, 4), F(7, 8)]
    bad = []
    corpus = random_corpus(count, max_n)
    rng = random.Random(SEED + 3)
    profiles = []
    for idx, g in enumerate(corpus):
        dm = all_pairs_distances(g)
        prof = curvature_profile(g, dm)
        profiles.append((dm, prof))
        for x in range(g.n):
            for y in range(x + 1, g.n):
                ks = {a: kappa_alpha(g, dm, x, y, a) for a in grid}
                for a in grid[:4]:
                    if ks[a] > (1 - a) * F(2, dm(x, y)):
                        bad.append(f"(a) graph {idx} pair {(x, y)} α={a}: κ={ks[a]}")
                hs = [ks[a] / (1 - a) for a in grid]
                if any(h1 > h2 for h1, h2 in zip(hs, hs[1:])):
                    bad.append(f"(b) graph {idx} pair {(x, y)}: h={hs}")
        for k0 in prof.thresholds():
            zero = integral_curvature(g, prof, k0).value == 0
            if zero != (prof.min >= k0):
                bad.append(f"(d) graph {idx} κ0={k0}")
    done = 0
    while done < draws:
        idx = rng.randrange(count)
        g = corpus[idx]
        dm, prof = profiles[idx]
        x, y = rng.sample(range(g.n), 2)
        k0 = rng.choice(prof.thresholds() + [F(rng.randint(-8, 16), 8)])
        if not key_lemma_check(g, dm, prof, x, y, k0):
            bad.append(f"(c) graph {idx} pair {(x, y)} κ0={k0}")
        done += 1
    return CheckResult(f"curvature laws on {count} random graphs", not bad, _fail(bad) or "upper bound, monotone h, key lemma, vanishing I")


def check_bounds_soundness(count: int = 50, max_n: int = 10) -> CheckResult:
    bad = []
    for idx, g in enumerate(random_corpus(count, max_n)):
        dm = all_pairs_distances(g)
        prof = curvature_profile(g, dm)
        lam1 = spectrum(g).lambda1
        for k0 in prof.thresholds():
            if k0 <= 0:
                continue
            integral = integral_curvature(g, prof, k0).value
            if diameter_bound_lly(k0, integral) < dm.diameter:
                bad.append(f"graph {idx} κ0={k0}: diameter")
            if moore_bound_auto(g.max_degree, k0, integral) < g.n:
                bad.append(f"graph {idx} κ0={k0}: moore")
            if lam1 + TOL < lichnerowicz_bound(k0, integral):
                bad.append(f"graph {idx} κ0={k0}: λ1={lam1}")
    return CheckResult(f"bounds soundness on {count} random graphs", not bad, _fail(bad) or "diameter, Moore and λ1 bounds hold")


def check_spectral_identity(count: int = 20, max_n: int = 10) -> CheckResult:
    bad = []
    for idx, g in enumerate(random_corpus(count, max_n, SEED + 4)):
        for a in (F(0), F(1, 3), F(1, 2), F(3, 4)):
            if not mixing_operator_check(g, a, TOL):
                bad.append(f"graph {idx} α={a}")
    return CheckResult(f"averaging-operator spectrum on {count} random graphs", not bad, _fail(bad) or "eig(M_α) = 1 - (1-α) eig(Δ)")


def lly_moore_formula(d_max: int, kappa0: Fraction) -> Fraction:
    """Pointwise positive-curvature Moore bound, written out independently."""
    total = F(1)
    for k in range(1, math.floor(2 / kappa0) + 1):
        term = F(d_max) ** k
        for i in range(1, k):
            term *= 1 - i * kappa0 / 2
        total += term
    return total


def check_pointwise_recovery() -> CheckResult:
    bad = []
    graphs = [path_graph(2)] + [complete_graph(m) for m in range(3, 7)]
    for g in graphs:
        dm = all_pairs_distances(g)
        prof = curvature_profile(g, dm)
        k0 = prof.min
        integral = integral_curvature(g, prof, k0).value
        if k0 <= 0 or integral != 0:
            bad.append(f"n={g.n}: κ0={k0}, I={integral}")
            continue
        if diameter_bound_lly(k0, integral) != math.floor(2 / k0):
            bad.append(f"n={g.n}: diameter bound")
        if moore_bound_auto(g.max_degree, k0, integral) != lly_moore_formula(g.max_degree, k0):
            bad.append(f"n={g.n}: Moore bound")
    return CheckResult("pointwise recovery on K_2..K_6", not bad, _fail(bad) or "⌊2/κ0⌋ and the pointwise Moore formula reproduced")


CHECKS: list[Callable[[], CheckResult]] = [
    check_path_family,
    check_dumbbell_family,
    check_binary_tree_family,
    check_pendant_hexagon,
    check_lichnerowicz_equality,
    check_moore_obstruction,
    check_duality,
    check_curvature_laws,
    check_bounds_soundness,
    check_spectral_identity,
    check_pointwise_recovery,
]


def run_suite() -> list[CheckResult]:
    results = []
    for check in CHECKS:
        try:
            results.append(check())
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            results.append(CheckResult(check.__name__, False, f"{type(exc).__name__}: {exc}"))
    return results
