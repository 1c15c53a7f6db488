"""Undirected simple graphs and the subgraph constructors the decompositions use.

Distances are plain ints; an unreachable vertex is at ``math.inf``.  Every
function here is pure: graphs are never mutated after construction.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

INF = math.inf

Edge = tuple[int, int]


class PairTooFarError(ValueError):
    """The two endpoints of a walk subgraph are farther apart than allowed."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` keeps the order the edges were given in (the file order for
    loaded graphs) so reports can refer to edges by index.
    """

    __slots__ = ("n", "edges", "adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        ordered: list[Edge] = []
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            ordered.append(norm_edge(u, v))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(ordered)
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._edge_set = frozenset(ordered)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[Edge]:
        return self._edge_set

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._edge_set

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def with_edges(self, edges: Iterable[Edge]) -> Graph:
        """Same vertex set, different edge set (used for residual graphs)."""
        return Graph(self.n, sorted(edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self.n, self._edge_set))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Subgraph:
    """Induced subgraph: a vertex subset together with all edges inside it."""

    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __len__(self) -> int:
        return len(self.edges)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def induced_edges(g: Graph, vertices: Iterable[int]) -> frozenset[Edge]:
    vs = set(vertices)
    return frozenset((u, w) for u in vs for w in g.adj[u] if u < w and w in vs)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Subgraph:
    vs = frozenset(vertices)
    return Subgraph(vs, induced_edges(g, vs))


def bfs_distances(g: Graph, v: int, limit: int | None = None) -> list[int | float]:
    """Shortest-path distance from ``v`` to every vertex (``INF`` if unreachable).

    With ``limit`` the search stops expanding at that depth, so vertices
    farther than ``limit`` are reported as ``INF``.
    """
    _check_vertex(g, v)
    dist: list[int | float] = [INF] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if limit is not None and du >= limit:
            continue
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = du + 1
                queue.append(w)
    return dist


def _span_adjacency(edges: Iterable[Edge]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


def diameter_of_adjacency(adj: dict[int, list[int]]) -> int | float:
    best = 0
    total = len(adj)
    for s in adj:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) < total:
            return INF
        best = max(best, max(dist.values()))
    return best


def diameter_of_edge_set(g: Graph, edges: Iterable[Sequence[int]]) -> int | float:
    """Diameter of the standalone graph spanned by ``edges``.

    The empty edge set has diameter 0, a disconnected span ``INF``.
    """
    normed = set()
    for e in edges:
        ne = norm_edge(int(e[0]), int(e[1]))
        if ne not in g.edge_set():
            raise ValueError(f"edge {ne} is not an edge of the graph")
        normed.add(ne)
    return diameter_of_adjacency(_span_adjacency(normed))


def graph_diameter(g: Graph) -> int | float:
    """Diameter of ``g`` itself, isolated vertices included."""
    if g.n == 0:
        return 0
    adj = {v: list(g.adj[v]) for v in range(g.n)}
    return diameter_of_adjacency(adj)


def walk_subgraph(g: Graph, v: int, w: int, d: int) -> Subgraph:
    """Induced subgraph on every vertex lying on a v-w walk of length <= d.

    A vertex ``u`` lies on such a walk iff dist(v,u) + dist(u,w) <= d.
    """
    _check_vertex(g, v)
    _check_vertex(g, w)
    if d < 1:
        raise ValueError(f"walk length bound must be positive, got {d}")
    dv = bfs_distances(g, v, limit=d)
    if dv[w] > d:
        raise PairTooFarError(f"dist({v}, {w}) = {dv[w]} exceeds {d}")
    dw = bfs_distances(g, w, limit=d)
    keep = [u for u in range(g.n) if dv[u] + dw[u] <= d]
    return induced_subgraph(g, keep)


def ball_subgraph(g: Graph, v: int, r: int) -> Subgraph:
    """Induced subgraph on the vertices within distance ``r`` of ``v``."""
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    dist = bfs_distances(g, v, limit=r)
    return induced_subgraph(g, [u for u in range(g.n) if dist[u] <= r])


def peel_min_degree(g: Graph, theta: Fraction | int | float) -> Subgraph:
    """Repeatedly delete the lowest-id vertex of current degree <= theta.

    The survivor set is the unique maximal induced subgraph with minimum
    degree > theta, so the deletion order only matters for traces.
    """
    if theta < 0:
        raise ValueError(f"threshold must be nonnegative, got {theta}")
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    heap = [v for v in range(g.n) if deg[v] <= theta]
    heapq.heapify(heap)
    queued = set(heap)
    while heap:
        v = heapq.heappop(heap)
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= theta and w not in queued:
                    queued.add(w)
                    heapq.heappush(heap, w)
    return induced_subgraph(g, [v for v in range(g.n) if alive[v]])


def blow_up(g: Graph, r: int) -> Graph:
    """Replace vertex i by the independent set ``{i*r, ..., i*r + r - 1}``."""
    if r < 1:
        raise ValueError(f"blow-up factor must be >= 1, got {r}")
    edges = [
        (i * r + a, j * r + b)
        for i, j in g.edges
        for a in range(r)
        for b in range(r)
    ]
    return Graph(g.n * r, edges)


def is_bipartition(g: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> bool:
    a, b = set(side_a), set(side_b)
    if a & b or (a | b) != set(range(g.n)):
        return False
    return all((u in a) != (v in a) for u, v in g.edges)


def bipartite_diam3_check(g: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> bool:
    """True iff every same-side pair has a common neighbour.

    For a bipartite graph on at least three vertices this is equivalent to
    having diameter at most 3.
    """
    a, b = sorted(set(side_a)), sorted(set(side_b))
    if not is_bipartition(g, a, b):
        raise ValueError("given sides are not a bipartition of the graph")
    if g.n < 3:
        raise ValueError("characterisation needs at least three vertices")
    for side in (a, b):
        for i, u in enumerate(side):
            for w in side[i + 1:]:
                if not g.adj[u] & g.adj[w]:
                    return False
    return True


def connected_components(g: Graph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    pool = range(g.n) if vertices is None else sorted(vertices)
    seen: set[int] = set()
    comps = []
    for s in pool:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps
