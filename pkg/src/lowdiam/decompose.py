"""Edge partitions into low-diameter parts plus an exceptional set ``e0``.

Each greedy routine repeatedly pulls a low-diameter subgraph out of the
residual graph until at most eps * n^2 (eps * n^k for hypergraphs) edges
remain; those form ``e0``.  All choices break ties towards the smallest
vertex ids, so outputs are deterministic and the sequence of extracted
parts does not depend on eps (eps only decides when to stop).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import bound_formula
from .graph import (
    Edge,
    Graph,
    ball_subgraph,
    connected_components,
    diameter_of_adjacency,
    induced_edges,
    peel_min_degree,
    walk_subgraph,
)
from .hypergraph import HEdge, Hypergraph, link_subhypergraph


@dataclass
class EdgePartition:
    e0: frozenset
    parts: list[frozenset]
    epsilon: Fraction
    diam_cap: int
    algorithm: str = ""
    fallback_parts: int = 0

    @property
    def num_parts(self) -> int:
        return len(self.parts)


def as_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float.

    Floats go through ``str`` so 0.05 becomes 1/20 rather than its binary
    expansion.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


def _check_eps(eps) -> Fraction:
    eps = as_fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {eps}")
    return eps


def decompose_stars(g: Graph) -> EdgePartition:
    """Edge (u, v) goes to the star centred at min(u, v)."""
    buckets: dict[int, set[Edge]] = {}
    for u, v in g.edges:
        buckets.setdefault(min(u, v), set()).add((min(u, v), max(u, v)))
    parts = [frozenset(buckets[c]) for c in sorted(buckets)]
    return EdgePartition(frozenset(), parts, Fraction(0), 2, "stars")


def prune_to_diam2(g: Graph) -> EdgePartition:
    """Delete vertices seeing fewer than half of the other survivors.

    The survivors induce a graph of diameter <= 2 and fewer than n^2/4
    edges are discarded.
    """
    alive = set(range(g.n))
    deg = [len(a) for a in g.adj]
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            # deg[v] < (|alive| - 1) / 2
            if 2 * deg[v] < len(alive) - 1:
                alive.discard(v)
                for w in g.adj[v]:
                    if w in alive:
                        deg[w] -= 1
                changed = True
                break
    kept = induced_edges(g, alive)
    parts = [kept] if kept else []
    e0 = g.edge_set() - kept
    return EdgePartition(frozenset(e0), parts, Fraction(1, 4), 2, "prune")


def _adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    if g.m:
        us, vs = zip(*g.edges)
        a[us, vs] = 1
        a[vs, us] = 1
    return a


def p3_counts(g: Graph) -> np.ndarray:
    """Matrix of paths u-a-b-v on four distinct vertices between each pair.

    Length-3 walks that are not paths revisit an endpoint: u-v-b-v,
    u-a-u-v and u-v-u-v, which only exist when uv is an edge.
    """
    a = _adjacency_matrix(g)
    deg = a.sum(axis=1)
    walks3 = a @ a @ a
    counts = walks3 - a * (deg[:, None] + deg[None, :] - 1)
    np.fill_diagonal(counts, 0)
    return counts


def best_pair_by_p3(g: Graph) -> tuple[int, int, int]:
    """Pair (u < v) with the most length-3 paths between them.

    Returns ``(-1, -1, 0)`` when the graph has no path on four vertices.
    """
    if g.n < 4 or g.m < 3:
        return (-1, -1, 0)
    counts = np.triu(p3_counts(g), k=1)
    flat = int(np.argmax(counts))
    u, v = divmod(flat, g.n)
    best = int(counts[u, v])
    if best == 0:
        return (-1, -1, 0)
    return (u, v, best)


def _component_parts(residual: Graph, cap: int) -> list[frozenset]:
    """Residual components of diameter <= cap, largest edge count first."""
    found = []
    for comp in connected_components(residual):
        edges = induced_edges(residual, comp)
        if not edges:
            continue
        adj = {v: list(residual.adj[v]) for v in comp}
        if diameter_of_adjacency(adj) <= cap:
            found.append((-len(edges), comp[0], edges))
    found.sort(key=lambda t: (t[0], t[1]))
    return [edges for _, _, edges in found]


def decompose_diam3(g: Graph, eps) -> EdgePartition:
    """Greedy extraction of G_3(u, v) around the pair with most length-3 paths."""
    eps = _check_eps(eps)
    budget = eps * g.n * g.n
    residual = set(g.edges)
    parts: list[frozenset] = []
    fallback = 0
    if eps < Fraction(1, 2):
        while len(residual) > budget:
            rg = g.with_edges(residual)
            u, v, count = best_pair_by_p3(rg)
            if count:
                part = walk_subgraph(rg, u, v, 3).edges
            else:
                # No path on four vertices: every component is a star or a
                # triangle, hence already of diameter <= 2.
                comps = _component_parts(rg, 3)
                if not comps:
                    raise AssertionError("residual without P4 has a component of diameter > 3")
                part = comps[0]
                fallback += 1
            parts.append(part)
            residual -= part
    return EdgePartition(frozenset(residual), parts, eps, 3, "diam3", fallback)


def _ball2_edge_counts(g: Graph, vertices: list[int]) -> np.ndarray:
    """Edges of the radius-2 ball around each listed vertex, within g."""
    a = _adjacency_matrix(g)
    reach = np.eye(g.n, dtype=np.int64) + a
    reach = (reach + reach @ a) > 0
    sub = reach[vertices].astype(np.int64)
    return ((sub @ a) * sub).sum(axis=1) // 2


def decompose_diam4(g: Graph, eps) -> EdgePartition:
    """Greedy extraction of radius-2 balls in the min-degree core of the residual."""
    eps = _check_eps(eps)
    budget = eps * g.n * g.n
    residual = set(g.edges)
    parts: list[frozenset] = []
    fallback = 0
    if eps < Fraction(1, 2):
        while len(residual) > budget:
            rg = g.with_edges(residual)
            theta = Fraction(len(residual), 2 * g.n)
            core = peel_min_degree(rg, theta)
            if core.edges:
                cg = g.with_edges(core.edges)
                cand = sorted(core.vertices)
                scores = _ball2_edge_counts(cg, cand)
                v = cand[int(np.argmax(scores))]
                part = ball_subgraph(cg, v, 2).edges
            else:
                # Unreachable in practice: peeling at m/2n deletes at most
                # m/2 edges.  Kept so the loop is total for any threshold.
                comps = _component_parts(rg, 4)
                if comps:
                    part = comps[0]
                else:
                    live = sorted({x for e in residual for x in e})
                    scores = _ball2_edge_counts(rg, live)
                    part = ball_subgraph(rg, live[int(np.argmax(scores))], 2).edges
                fallback += 1
            parts.append(part)
            residual -= part
    return EdgePartition(frozenset(residual), parts, eps, 4, "diam4", fallback)


def _residual_link(residual: Hypergraph, e: HEdge) -> frozenset[HEdge]:
    return link_subhypergraph(residual, e).edges


def decompose_hyper_diam3(h: Hypergraph, eps) -> EdgePartition:
    """Greedy extraction of the largest link G(e) over residual edges e."""
    eps = _check_eps(eps)
    budget = eps * h.n ** h.k
    residual = set(h.edges)
    parts: list[frozenset] = []
    if eps < Fraction(1, 2):
        while len(residual) > budget:
            rh = h.with_edges(residual)
            best: tuple[int, HEdge] | None = None
            best_part: frozenset[HEdge] = frozenset()
            for e in sorted(residual):
                part = _residual_link(rh, e)
                if best is None or len(part) > best[0]:
                    best = (len(part), e)
                    best_part = part
            parts.append(best_part)
            residual -= best_part
    return EdgePartition(frozenset(residual), parts, eps, 3, "hyper_diam3")


def part_count_bound(algorithm: str, n: int, eps: Fraction) -> float | None:
    """Closed-form part-count bound the algorithm is held to (None if none)."""
    kind = {
        "stars": "diam2_stars",
        "prune": "diam2_prune",
        "diam3": "diam3_upper",
        "diam4": "diam4_upper",
    }.get(algorithm)
    if kind is None:
        return None
    return bound_formula(kind, n=n, eps=eps)


__all__ = [
    "EdgePartition",
    "as_fraction",
    "best_pair_by_p3",
    "decompose_diam3",
    "decompose_diam4",
    "decompose_hyper_diam3",
    "decompose_stars",
    "p3_counts",
    "prune_to_diam2",
    "part_count_bound",
]
