"""Alpha-Ricci and Lin-Lu-Yau curvature, and integral curvature sums.

Everything here is exact rational arithmetic on top of ``transport``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import AlphaOutOfRange, NoStabilization, SameVertex
from .graph import DistanceMatrix, Graph
from .transport import lazy_walk_measure, wasserstein

MAX_REFINEMENTS = 20


@dataclass(frozen=True)
class PairCurvature:
    x: int
    y: int
    value: Fraction
    alpha: Fraction | None = None  # None means Lin-Lu-Yau

    @property
    def kind(self) -> str:
        return "lly" if self.alpha is None else "alpha"


@dataclass(frozen=True)
class CurvatureProfile:
    edges: dict[tuple[int, int], Fraction]
    # largest alpha at which some edge's idleness function was seen to
    # stabilise; κ_α = (1 - α) κ_LLY holds on every edge from here to 1
    stable_alpha: Fraction

    @property
    def min(self) -> Fraction:
        return min(self.edges.values())

    @property
    def max(self) -> Fraction:
        return max(self.edges.values())

    def thresholds(self) -> list[Fraction]:
        """Distinct edge curvatures, ascending: the kinks of I as a function of κ0."""
        return sorted(set(self.edges.values()))


@dataclass(frozen=True)
class IntegralCurvature:
    kappa0: Fraction
    value: Fraction
    alpha: Fraction | None = None

    @property
    def kind(self) -> str:
        return "lly" if self.alpha is None else "alpha"


def _check_pair(x: int, y: int) -> None:
    if x == y:
        raise SameVertex(f"curvature needs two distinct vertices, got {x} twice")


def _check_alpha(alpha: Fraction) -> Fraction:
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {alpha}")
    return alpha


def kappa_alpha(g: Graph, dm: DistanceMatrix, x: int, y: int, alpha) -> Fraction:
    _check_pair(x, y)
    alpha = _check_alpha(alpha)
    w = wasserstein(g, dm, lazy_walk_measure(g, x, alpha), lazy_walk_measure(g, y, alpha)).value
    return 1 - w / dm(x, y)


def idleness_function(g: Graph, dm: DistanceMatrix, x: int, y: int, alphas: Iterable) -> list[tuple[Fraction, Fraction]]:
    """Pairs ``(alpha, kappa_alpha / (1 - alpha))`` for each requested alpha."""
    out = []
    for a in alphas:
        a = _check_alpha(a)
        out.append((a, kappa_alpha(g, dm, x, y, a) / (1 - a)))
    return out


def _lly_with_alpha(g: Graph, dm: DistanceMatrix, x: int, y: int) -> tuple[Fraction, Fraction]:
    """Return (κ_LLY, alpha from which the idleness function is constant).

    κ_α is concave in α (W is convex along the affine path of measures) and
    vanishes at α = 1, so two equal idleness values at α < α' prove that κ_α
    is linear on [α, 1] and the limit has been reached.
    """
    _check_pair(x, y)
    d = max(g.degree(x), g.degree(y))
    gap = Fraction(1, d + 1)
    h_prev = kappa_alpha(g, dm, x, y, 1 - gap) / gap
    for _ in range(MAX_REFINEMENTS):
        gap /= 2
        h = kappa_alpha(g, dm, x, y, 1 - gap) / gap
        if h == h_prev:
            return h, 1 - 2 * gap
        h_prev = h
    raise NoStabilization(f"idleness function of ({x}, {y}) still moving after {MAX_REFINEMENTS} refinements")


def kappa_lly(g: Graph, dm: DistanceMatrix, x: int, y: int) -> Fraction:
    return _lly_with_alpha(g, dm, x, y)[0]


def curvature_profile(g: Graph, dm: DistanceMatrix) -> CurvatureProfile:
    edges = {}
    stable = Fraction(0)
    for u, v in g.edges():
        edges[u, v], a = _lly_with_alpha(g, dm, u, v)
        stable = max(stable, a)
    return CurvatureProfile(edges, stable)


def alpha_profile(g: Graph, dm: DistanceMatrix, alpha) -> dict[tuple[int, int], Fraction]:
    return {(u, v): kappa_alpha(g, dm, u, v, alpha) for u, v in g.edges()}


def rho(kappa0, kappa) -> Fraction:
    return max(Fraction(0), Fraction(kappa0) - kappa)


def rho_alpha(kappa0, alpha, kappa_alpha_value) -> Fraction:
    alpha = _check_alpha(alpha)
    return max(Fraction(0), (1 - alpha) * Fraction(kappa0) - kappa_alpha_value)


def integral_curvature(g: Graph, profile: CurvatureProfile, kappa0) -> IntegralCurvature:
    kappa0 = Fraction(kappa0)
    total = sum((rho(kappa0, k) for k in profile.edges.values()), Fraction(0))
    return IntegralCurvature(kappa0, total)


def integral_curvature_alpha(g: Graph, dm: DistanceMatrix, kappa0, alpha) -> IntegralCurvature:
    kappa0 = Fraction(kappa0)
    alpha = _check_alpha(alpha)
    total = sum((rho_alpha(kappa0, alpha, k) for k in alpha_profile(g, dm, alpha).values()), Fraction(0))
    return IntegralCurvature(kappa0, total, alpha)
