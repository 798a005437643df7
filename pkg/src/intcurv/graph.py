"""Simple connected graphs, example families, hop metric, neighbourhood splits.

Vertices are dense 0-based integers. The original input labels are kept in
``Graph.labels`` so reports can be printed in the user's labelling.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    InvalidParameter,
    ParseError,
    SameVertex,
    SelfLoop,
)

FAMILIES = ("path", "cycle", "complete", "dumbbell", "binary_tree", "star", "pendant_hexagon")


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[int] = ()) -> "Graph":
        """Build and validate a graph on vertices ``0..n-1``.

        Raises SelfLoop, DuplicateEdge or Disconnected for inputs outside the
        class of connected simple graphs.
        """
        if n < 2:
            raise InvalidParameter(f"a connected graph with an edge needs n >= 2, got n={n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise DuplicateEdge(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        g = cls(n, tuple(tuple(sorted(s)) for s in nbrs), tuple(labels))
        unreached = g._unreached_from(0)
        if unreached:
            raise Disconnected(f"vertex {g.labels[unreached[0]]} is not reachable from vertex {g.labels[0]}")
        return g

    def _unreached_from(self, source: int) -> list[int]:
        seen = [False] * self.n
        seen[source] = True
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return [v for v in range(self.n) if not seen[v]]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def to_edge_list(self) -> str:
        return "".join(f"{self.labels[u]} {self.labels[v]}\n" for u, v in self.edges())

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}


# --------------------------------------------------------------------- input


def load_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` lines into a Graph.

    Blank lines and lines starting with ``#`` are skipped. Labels are
    relabelled to ``0..n-1`` in order of first appearance.
    """
    index: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    seen: dict[frozenset, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"line {lineno}: expected two nonnegative integers, got {raw!r}")
        a, b = int(parts[0]), int(parts[1])
        if a == b:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {a}")
        key = frozenset((a, b))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: edge {a} {b} repeats line {seen[key]}")
        seen[key] = lineno
        for lab in (a, b):
            if lab not in index:
                index[lab] = len(index)
        edges.append((index[a], index[b]))
    if not edges:
        raise ParseError("edge list contains no edges")
    labels = sorted(index, key=index.__getitem__)
    return Graph.from_edges(len(index), edges, labels)


def load_json_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed JSON graph: {exc}") from exc
    return Graph.from_edges(n, edges)


def load_graph_file(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json"):
        return load_json_graph(text)
    return load_edge_list(text)


# ---------------------------------------------------------------- generators


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameter(message)


def path_graph(n: int) -> Graph:
    _require(n >= 2, f"path needs n >= 2, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(m: int) -> Graph:
    _require(m >= 3, f"complete graph needs m >= 3, got {m}")
    return Graph.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def dumbbell_graph(m: int) -> Graph:
    """Two copies of K_m joined by one bridge.

    Vertex ``i`` is x_i and vertex ``m + i`` is y_i; the bridge is x_0 y_0.
    """
    _require(m >= 3, f"dumbbell needs m >= 3, got {m}")
    edges = []
    for off in (0, m):
        edges += [(off + i, off + j) for i in range(m) for j in range(i + 1, m)]
    edges.append((0, m))
    return Graph.from_edges(2 * m, edges)


def binary_tree_graph(m: int) -> Graph:
    """Complete binary tree with layers 0..m plus one extra leaf on the root.

    Tree nodes use heap numbering (children of k are 2k+1, 2k+2); the extra
    leaf is vertex ``2**(m+1) - 1``.
    """
    _require(m >= 1, f"binary tree needs m >= 1, got {m}")
    size = 2 ** (m + 1) - 1
    edges = [((k - 1) // 2, k) for k in range(1, size)]
    edges.append((0, size))
    return Graph.from_edges(size + 1, edges)


def star_graph(k: int) -> Graph:
    _require(k >= 1, f"star needs k >= 1, got {k}")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def pendant_hexagon_graph() -> Graph:
    """C_6 on vertices 0..5 with leaf ``i + 6`` hanging off cycle vertex ``i``."""
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(i, i + 6) for i in range(6)]
    return Graph.from_edges(12, edges)


def generate(family: str, n: int | None = None, m: int | None = None, k: int | None = None) -> Graph:
    """Dispatch to a named family; ``n`` sizes path/cycle, ``m`` complete/dumbbell/tree, ``k`` star."""

    def need(value, name):
        if value is None:
            raise InvalidParameter(f"family {family!r} requires parameter {name}")
        return value

    if family == "path":
        return path_graph(need(n, "n"))
    if family == "cycle":
        return cycle_graph(need(n, "n"))
    if family == "complete":
        return complete_graph(need(m, "m"))
    if family == "dumbbell":
        return dumbbell_graph(need(m, "m"))
    if family == "binary_tree":
        return binary_tree_graph(need(m, "m"))
    if family == "star":
        return star_graph(need(k, "k"))
    if family == "pendant_hexagon":
        return pendant_hexagon_graph()
    raise InvalidParameter(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree on ``n`` vertices plus each other pair with probability ``p``."""
    _require(n >= 2, f"random graph needs n >= 2, got {n}")
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


# ------------------------------------------------------------------- metric


@dataclass(frozen=True)
class DistanceMatrix:
    dist: tuple[tuple[int, ...], ...]

    def __call__(self, u: int, v: int) -> int:
        return self.dist[u][v]

    @property
    def diameter(self) -> int:
        return max(max(row) for row in self.dist)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def diameter(g: Graph) -> int:
    return all_pairs_distances(g).diameter


def shortest_path(g: Graph, x: int, y: int) -> list[int]:
    """One BFS-minimising path from x to y (smallest-id parents win ties)."""
    parent = [-1] * g.n
    parent[x] = x
    queue = deque([x])
    while queue and parent[y] < 0:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if parent[v] < 0:
                parent[v] = u
                queue.append(v)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    return path[::-1]


@dataclass(frozen=True)
class NeighborhoodPartition:
    gamma_plus: frozenset[int]
    gamma_zero: frozenset[int]
    gamma_minus: frozenset[int]


def neighborhood_partition(g: Graph, dm: DistanceMatrix, x: int, y: int) -> NeighborhoodPartition:
    """Split the neighbours of y by whether they move away from, along, or towards x."""
    if x == y:
        raise SameVertex(f"neighbourhood partition needs x != y (both {x})")
    base = dm(x, y)
    groups: dict[int, set[int]] = {1: set(), 0: set(), -1: set()}
    for v in g.adjacency[y]:
        groups[dm(x, v) - base].add(v)
    return NeighborhoodPartition(frozenset(groups[1]), frozenset(groups[0]), frozenset(groups[-1]))
