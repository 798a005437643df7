"""Exact Wasserstein-1 distance between finitely supported measures on a graph.

Masses are rationals. They are scaled by the lcm of their denominators so the
transportation problem becomes an integer min-cost flow, solved by successive
shortest augmenting paths (Dijkstra on reduced costs). The final node
potentials give an optimal Kantorovich potential, so every solution carries a
checkable optimality certificate.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping

from .errors import AlphaOutOfRange, InvalidParameter, TooLarge
from .graph import DistanceMatrix, Graph

BRUTE_FORCE_MAX_N = 10


@dataclass(frozen=True)
class ProbabilityMeasure:
    support: Mapping[int, Fraction]

    def __post_init__(self):
        support = {int(v): Fraction(m) for v, m in self.support.items()}
        if not support:
            raise InvalidParameter("probability measure needs a nonempty support")
        for v, m in support.items():
            if not 0 < m <= 1:
                raise InvalidParameter(f"mass {m} at vertex {v} is outside (0, 1]")
        if sum(support.values()) != 1:
            raise InvalidParameter(f"masses sum to {sum(support.values())}, not 1")
        object.__setattr__(self, "support", dict(sorted(support.items())))

    def __getitem__(self, v: int) -> Fraction:
        return self.support.get(v, Fraction(0))

    @classmethod
    def dirac(cls, v: int) -> "ProbabilityMeasure":
        return cls({v: Fraction(1)})


@dataclass(frozen=True)
class TransportSolution:
    value: Fraction
    coupling: dict[tuple[int, int], Fraction]
    potential: dict[int, Fraction]


def lazy_walk_measure(g: Graph, x: int, alpha: Fraction) -> ProbabilityMeasure:
    """One step of the walk that idles at x with probability alpha."""
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {alpha}")
    share = (1 - alpha) / g.degree(x)
    support = {v: share for v in g.adjacency[x]}
    if alpha:
        support[x] = alpha
    return ProbabilityMeasure(support)


class _MinCostFlow:
    """Integer min-cost flow by successive shortest paths with potentials.

    Edge ``e`` and its residual twin ``e ^ 1`` are stored side by side.
    """

    def __init__(self, n: int):
        self.n = n
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.head: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, cost: int) -> int:
        e = len(self.head)
        self.head += [v, u]
        self.cap += [cap, 0]
        self.cost += [cost, -cost]
        self.out[u].append(e)
        self.out[v].append(e + 1)
        return e

    def solve(self, s: int, t: int, demand: int) -> tuple[int, list[int]]:
        """Push ``demand`` units from s to t; return (cost, potentials).

        The potentials keep every residual reduced cost nonnegative, which is
        the dual certificate used by the caller. Costs must start nonnegative.
        """
        pot = [0] * self.n
        flow = total = 0
        while flow < demand:
            dist: list[int | None] = [None] * self.n
            prev = [-1] * self.n
            done = [False] * self.n
            dist[s] = 0
            heap = [(0, s)]
            while heap:
                du, u = heapq.heappop(heap)
                if done[u]:
                    continue
                done[u] = True
                if u == t:
                    break
                for e in self.out[u]:
                    if self.cap[e] <= 0:
                        continue
                    v = self.head[e]
                    nd = du + self.cost[e] + pot[u] - pot[v]
                    if dist[v] is None or nd < dist[v]:
                        dist[v] = nd
                        prev[v] = e
                        heapq.heappush(heap, (nd, v))
            if not done[t]:
                raise RuntimeError("min-cost flow: demand exceeds capacity")
            dt = dist[t]
            for v in range(self.n):
                pot[v] += dist[v] if done[v] else dt
            push = demand - flow
            v = t
            while v != s:
                e = prev[v]
                push = min(push, self.cap[e])
                v = self.head[e ^ 1]
            v = t
            while v != s:
                e = prev[v]
                self.cap[e] -= push
                self.cap[e ^ 1] += push
                total += push * self.cost[e]
                v = self.head[e ^ 1]
            flow += push
        return total, pot


def wasserstein(g: Graph, dm: DistanceMatrix, m1: ProbabilityMeasure, m2: ProbabilityMeasure) -> TransportSolution:
    """Optimal transport of m1 onto m2 with cost equal to hop distance."""
    for m in (m1, m2):
        for v in m.support:
            if not 0 <= v < g.n:
                raise InvalidParameter(f"measure charges vertex {v} outside the graph")
    sources = list(m1.support)
    sinks = list(m2.support)
    scale = lcm(*(q.denominator for q in (*m1.support.values(), *m2.support.values())))
    a = [int(m1[u] * scale) for u in sources]
    b = [int(m2[v] * scale) for v in sinks]

    ns, nt = len(sources), len(sinks)
    s, t = ns + nt, ns + nt + 1
    net = _MinCostFlow(ns + nt + 2)
    for i, u in enumerate(sources):
        net.add_edge(s, i, a[i], 0)
    middle = {}
    for i, u in enumerate(sources):
        for j, v in enumerate(sinks):
            middle[i, j] = net.add_edge(i, ns + j, scale, dm(u, v))
    for j, v in enumerate(sinks):
        net.add_edge(ns + j, t, b[j], 0)
    cost, pot = net.solve(s, t, scale)

    coupling = {}
    for (i, j), e in middle.items():
        moved = net.cap[e ^ 1]
        if moved:
            coupling[sources[i], sinks[j]] = Fraction(moved, scale)

    # Transportation duals are (-pot[i], pot[ns + j]); folding them into one
    # 1-Lipschitz function over the metric keeps the dual objective optimal.
    nodes = sorted(set(sources) | set(sinks))
    f = {z: min(dm(z, v) - pot[ns + j] for j, v in enumerate(sinks)) for z in nodes}
    shift = min(f.values())
    potential = {z: Fraction(f[z] - shift) for z in nodes}
    return TransportSolution(Fraction(cost, scale), coupling, potential)


def check_solution(dm: DistanceMatrix, m1: ProbabilityMeasure, m2: ProbabilityMeasure, sol: TransportSolution) -> list[str]:
    """Return the list of violated certificate conditions (empty when valid)."""
    problems = []
    rows: dict[int, Fraction] = {}
    cols: dict[int, Fraction] = {}
    for (u, v), mass in sol.coupling.items():
        if mass < 0:
            problems.append(f"negative coupling mass at {(u, v)}")
        rows[u] = rows.get(u, Fraction(0)) + mass
        cols[v] = cols.get(v, Fraction(0)) + mass
    if {k: v for k, v in rows.items() if v} != dict(m1.support):
        problems.append("first marginal does not match m1")
    if {k: v for k, v in cols.items() if v} != dict(m2.support):
        problems.append("second marginal does not match m2")
    f = sol.potential
    nodes = sorted(f)
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            if abs(f[u] - f[v]) > dm(u, v):
                problems.append(f"potential is not 1-Lipschitz on {(u, v)}")
    primal = sum((mass * dm(u, v) for (u, v), mass in sol.coupling.items()), Fraction(0))
    dual = sum((f[z] * (m1[z] - m2[z]) for z in nodes), Fraction(0))
    if not primal == dual == sol.value:
        problems.append(f"primal {primal}, dual {dual} and value {sol.value} disagree")
    return problems


def brute_force_dual(g: Graph, dm: DistanceMatrix, m1: ProbabilityMeasure, m2: ProbabilityMeasure) -> Fraction:
    """Maximise sum f (m1 - m2) over integer 1-Lipschitz f with f(0) = 0.

    Exhaustive enumeration; the dual polytope of an integer metric has integer
    vertices, so this equals the transport distance. Only for n <= 10.
    """
    if g.n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute-force dual enumerates 1-Lipschitz functions only for n <= {BRUTE_FORCE_MAX_N}, got {g.n}")
    order = sorted(range(g.n), key=lambda v: (dm(0, v), v))
    signed = [m1[v] - m2[v] for v in order]
    cost = [[dm(order[i], order[j]) for j in range(g.n)] for i in range(g.n)]
    f = [0] * g.n
    best: list[Fraction | None] = [None]

    # Extending a partial 1-Lipschitz assignment is always possible on a
    # metric, so lo <= hi at every level.
    def extend(i: int, acc: Fraction) -> None:
        if i == g.n:
            if best[0] is None or acc > best[0]:
                best[0] = acc
            return
        lo = max(f[j] - cost[j][i] for j in range(i))
        hi = min(f[j] + cost[j][i] for j in range(i))
        for val in range(lo, hi + 1):
            f[i] = val
            extend(i + 1, acc + val * signed[i])

    extend(1, Fraction(0))
    return best[0]
