"""Diameter, vertex-count and eigenvalue bounds from integral curvature.

Bounds are exact rationals (or exact floors of rationals); only the measured
eigenvalue is a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .curvature import (
    CurvatureProfile,
    IntegralCurvature,
    curvature_profile,
    integral_curvature,
    integral_curvature_alpha,
    kappa_lly,
)
from .errors import AlphaOutOfRange, InvalidParameter, NonpositiveThreshold, SameVertex
from .graph import DistanceMatrix, Graph, all_pairs_distances, shortest_path
from .spectral import spectrum

INAPPLICABLE = "inapplicable"
EIGEN_TOL = 1e-9


def _positive(kappa0) -> Fraction:
    kappa0 = Fraction(kappa0)
    if kappa0 <= 0:
        raise NonpositiveThreshold(f"this bound needs kappa0 > 0, got {kappa0}")
    return kappa0


def _alpha(alpha) -> Fraction:
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {alpha}")
    return alpha


def diameter_bound_lly(kappa0, integral) -> int:
    kappa0 = _positive(kappa0)
    return math.floor((2 + Fraction(integral)) / kappa0)


def diameter_bound_alpha(kappa0, alpha, integral_alpha) -> int:
    kappa0 = _positive(kappa0)
    alpha = _alpha(alpha)
    return math.floor((2 + Fraction(integral_alpha) / (1 - alpha)) / kappa0)


def local_diameter_bound(kappa) -> int | str:
    """Upper bound floor(2 / κ) on d(x, y) when κ_LLY(x, y) > 0."""
    kappa = Fraction(kappa)
    if kappa <= 0:
        return INAPPLICABLE
    return math.floor(2 / kappa)


def moore_factors(kappa0, integral, count: int) -> list[Fraction]:
    """The bracket factors 1 + (I - i κ0)/2 for i = 1..count."""
    kappa0, integral = Fraction(kappa0), Fraction(integral)
    return [1 + (integral - i * kappa0) / 2 for i in range(1, count + 1)]


def moore_bound(d_max: int, diam: int, kappa0, integral) -> Fraction:
    """1 + sum_{k=1..D} d_M^k prod_{i<k} [1 + (I - i κ0)/2], valid for any κ0."""
    if d_max < 1 or diam < 1:
        raise InvalidParameter(f"moore_bound needs d_M >= 1 and D >= 1, got d_M={d_max}, D={diam}")
    integral = Fraction(integral)
    if integral < 0:
        raise InvalidParameter(f"integral curvature is nonnegative, got {integral}")
    factors = moore_factors(kappa0, integral, diam - 1)
    total = Fraction(1)
    prod = Fraction(1)
    for k in range(1, diam + 1):
        if k > 1:
            prod *= factors[k - 2]
        total += d_max**k * prod
    return total


def moore_bound_auto(d_max: int, kappa0, integral) -> Fraction:
    kappa0 = _positive(kappa0)
    return moore_bound(d_max, diameter_bound_lly(kappa0, integral), kappa0, integral)


def lichnerowicz_bound(kappa0, integral) -> Fraction:
    return _positive(kappa0) - Fraction(integral)


def lichnerowicz_bound_alpha(kappa0, alpha, integral_alpha) -> Fraction:
    kappa0 = _positive(kappa0)
    alpha = _alpha(alpha)
    return kappa0 - Fraction(integral_alpha) / (1 - alpha)


def moore_obstruction(d_max: int) -> Fraction:
    """Ceiling 2/d_M on κ0 - I_κ0 for a diameter-2 Moore graph of degree d_M."""
    if d_max < 1:
        raise InvalidParameter(f"moore_obstruction needs d_M >= 1, got {d_max}")
    return Fraction(2, d_max)


def key_lemma_check(g: Graph, dm: DistanceMatrix, profile: CurvatureProfile, x: int, y: int, kappa0) -> bool:
    """κ(x,y) >= mean path-edge κ >= κ0 - I/d(x,y) along one shortest path."""
    if x == y:
        raise SameVertex(f"key lemma needs x != y, got {x} twice")
    kappa0 = Fraction(kappa0)
    d = dm(x, y)
    path = shortest_path(g, x, y)
    edge_sum = sum((profile.edges[min(a, b), max(a, b)] for a, b in zip(path, path[1:])), Fraction(0))
    integral = integral_curvature(g, profile, kappa0).value
    return kappa_lly(g, dm, x, y) >= edge_sum / d >= kappa0 - integral / d


@dataclass
class BoundReport:
    kappa0: Fraction
    integral: IntegralCurvature
    actual_diameter: int
    actual_n: int
    d_max: int
    actual_lambda1: float
    diameter_bound: int | str
    moore_bound: Fraction
    moore_bound_auto: Fraction | str
    lichnerowicz_bound: Fraction | str
    alpha: Fraction | None = None
    integral_alpha: IntegralCurvature | None = None
    diameter_bound_alpha: int | str | None = None
    lichnerowicz_bound_alpha: Fraction | str | None = None
    holds: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(self.holds.values())


def _report(g, dm, profile, lam1, kappa0, alpha) -> BoundReport:
    kappa0 = Fraction(kappa0)
    integral = integral_curvature(g, profile, kappa0)
    diam, n, d_max = dm.diameter, g.n, g.max_degree
    rep = BoundReport(
        kappa0=kappa0,
        integral=integral,
        actual_diameter=diam,
        actual_n=n,
        d_max=d_max,
        actual_lambda1=lam1,
        diameter_bound=INAPPLICABLE,
        moore_bound=moore_bound(d_max, diam, kappa0, integral.value),
        moore_bound_auto=INAPPLICABLE,
        lichnerowicz_bound=INAPPLICABLE,
    )
    rep.holds["moore"] = rep.moore_bound >= n
    if kappa0 > 0:
        rep.diameter_bound = diameter_bound_lly(kappa0, integral.value)
        rep.moore_bound_auto = moore_bound_auto(d_max, kappa0, integral.value)
        rep.lichnerowicz_bound = lichnerowicz_bound(kappa0, integral.value)
        rep.holds["diameter"] = rep.diameter_bound >= diam
        rep.holds["moore_auto"] = rep.moore_bound_auto >= n
        rep.holds["lichnerowicz"] = lam1 + EIGEN_TOL >= rep.lichnerowicz_bound
        if rep.diameter_bound == diam:
            rep.notes.append("diameter bound is sharp")
        elif rep.diameter_bound > n - 1:
            rep.notes.append(f"diameter bound vacuous: exceeds n-1={n - 1}")
        if rep.lichnerowicz_bound <= 0:
            rep.notes.append("lichnerowicz bound vacuous: nonpositive")
    else:
        rep.notes.append("kappa0 <= 0: diameter and eigenvalue bounds inapplicable")
    if alpha is not None:
        alpha = _alpha(alpha)
        rep.alpha = alpha
        rep.integral_alpha = integral_curvature_alpha(g, dm, kappa0, alpha)
        rep.diameter_bound_alpha = INAPPLICABLE
        rep.lichnerowicz_bound_alpha = INAPPLICABLE
        if kappa0 > 0:
            rep.diameter_bound_alpha = diameter_bound_alpha(kappa0, alpha, rep.integral_alpha.value)
            rep.lichnerowicz_bound_alpha = lichnerowicz_bound_alpha(kappa0, alpha, rep.integral_alpha.value)
            rep.holds["diameter_alpha"] = rep.diameter_bound_alpha >= diam
            rep.holds["lichnerowicz_alpha"] = lam1 + EIGEN_TOL >= rep.lichnerowicz_bound_alpha
    return rep


def audit(g: Graph, kappa0=None, alpha=None, profile: CurvatureProfile | None = None) -> list[BoundReport]:
    """One report per threshold; without kappa0, sweep the distinct edge curvatures."""
    dm = all_pairs_distances(g)
    if profile is None:
        profile = curvature_profile(g, dm)
    lam1 = spectrum(g).lambda1
    thresholds = profile.thresholds() if kappa0 is None else [Fraction(kappa0)]
    return [_report(g, dm, profile, lam1, k0, alpha) for k0 in thresholds]
