"""Edge covers of graphs with minimum degree at least eps * n.

Parts may overlap.  The sampling cover is randomised but seeded
(numpy's PCG64), and completes any edge the samples missed with a
deterministic extra part so the result always covers every edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import sample_count
from .decompose import as_fraction
from .graph import Graph, ball_subgraph, bfs_distances, walk_subgraph


class MinDegreeError(ValueError):
    def __init__(self, vertex: int, degree: int, required):
        super().__init__(
            f"vertex {vertex} has degree {degree} < eps*n = {required}"
        )
        self.vertex = vertex


@dataclass
class EdgeCover:
    parts: list[frozenset]
    diam_cap: int
    epsilon: Fraction
    algorithm: str = ""
    seed: int | None = None
    fallback_parts: int = 0
    raw_parts: int = 0  # parts produced before deduplication

    @property
    def num_parts(self) -> int:
        return len(self.parts)


def check_min_degree(g: Graph, eps) -> Fraction:
    eps = as_fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {eps}")
    required = eps * g.n
    for v in range(g.n):
        if len(g.adj[v]) < required:
            raise MinDegreeError(v, len(g.adj[v]), required)
    return eps


def cover_sampling_diam3(g: Graph, eps, seed: int) -> EdgeCover:
    eps = check_min_degree(g, eps)
    if g.n < 2:
        raise ValueError("sampling cover needs at least two vertices")
    ell = sample_count(g.n, eps)
    rng = np.random.default_rng(seed)
    pairs = rng.integers(0, g.n, size=(ell, 2))
    dist_cache: dict[int, list] = {}
    parts: list[frozenset] = []
    seen: set[frozenset] = set()
    raw = 0
    for v, w in pairs.tolist():
        if v not in dist_cache:
            dist_cache[v] = bfs_distances(g, v, limit=3)
        if dist_cache[v][w] > 3:
            continue
        part = walk_subgraph(g, v, w, 3).edges
        raw += 1
        if part and part not in seen:
            seen.add(part)
            parts.append(part)
    covered = set().union(*parts) if parts else set()
    fallback = 0
    for u, v in g.edges:
        if (u, v) in covered:
            continue
        part = walk_subgraph(g, u, v, 3).edges
        covered |= part
        parts.append(part)
        fallback += 1
    return EdgeCover(parts, 3, eps, "sampling_diam3", seed, fallback, raw + fallback)


def maximal_scattered_set(g: Graph) -> list[int]:
    """Greedy (ascending id) maximal set of vertices pairwise more than 2 apart."""
    blocked = [False] * g.n
    chosen = []
    for v in range(g.n):
        if blocked[v]:
            continue
        chosen.append(v)
        dist = bfs_distances(g, v, limit=2)
        for u in range(g.n):
            if dist[u] <= 2:
                blocked[u] = True
    return chosen


def cover_diam5(g: Graph, eps) -> EdgeCover:
    eps = check_min_degree(g, eps)
    centres = maximal_scattered_set(g)
    parts = [ball_subgraph(g, v, 2).edges for v in centres]
    for i, v in enumerate(centres):
        dist = bfs_distances(g, v, limit=5)
        for w in centres[i + 1:]:
            if dist[w] <= 5:
                parts.append(walk_subgraph(g, v, w, 5).edges)
    parts = [p for p in parts if p]
    return EdgeCover(parts, 5, eps, "cover_diam5", raw_parts=len(parts))


def cover_diam6(g: Graph, eps) -> EdgeCover:
    eps = check_min_degree(g, eps)
    parts = [ball_subgraph(g, v, 3).edges for v in maximal_scattered_set(g)]
    parts = [p for p in parts if p]
    return EdgeCover(parts, 6, eps, "cover_diam6", raw_parts=len(parts))
