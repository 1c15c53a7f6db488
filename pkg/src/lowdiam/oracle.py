"""Independent recomputation used by the verifiers.

Nothing here calls into the producing algorithms.  Graph distances go
through scipy's csgraph BFS; hypergraph distances enumerate genuine tight
paths breadth-first; the max-edge search is a bitmask sweep over vertex
subsets.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import SizeCapError

INF = math.inf

MAX_ORACLE_VERTICES = 14


def edge_set_diameter(edges: Iterable[Sequence[int]]) -> int | float:
    """Diameter of the graph spanned by ``edges``; 0 if empty, INF if disconnected."""
    edges = [tuple(e) for e in edges]
    if not edges:
        return 0
    verts = sorted({x for e in edges for x in e})
    pos = {v: i for i, v in enumerate(verts)}
    rows = [pos[u] for u, v in edges] + [pos[v] for u, v in edges]
    cols = [pos[v] for u, v in edges] + [pos[u] for u, v in edges]
    mat = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(verts), len(verts)))
    dist = shortest_path(mat, method="D", directed=False, unweighted=True)
    top = dist.max()
    return INF if np.isinf(top) else int(top)


def tight_path_diameter(edges: Iterable[Sequence[int]], k: int) -> int | float:
    """Tight diameter by breadth-first enumeration of distinct-vertex paths."""
    edge_sets = {frozenset(e) for e in edges}
    if not edge_sets:
        return 0
    verts = sorted({x for e in edge_sets for x in e})
    best = 0
    for v in verts:
        targets = set(verts) - {v}
        found: dict[int, int] = {}
        frontier = []
        for e in edge_sets:
            if v in e:
                frontier.extend(_orderings(v, e))
        length = 1
        while frontier and len(found) < len(targets):
            for seq in frontier:
                end = seq[-1]
                if end not in found:
                    found[end] = length
            if len(found) == len(targets):
                break
            nxt = []
            for seq in frontier:
                tail = seq[len(seq) - k + 1:]
                for x in verts:
                    if x not in seq and frozenset(tail + (x,)) in edge_sets:
                        nxt.append(seq + (x,))
            frontier = nxt
            length += 1
        if len(found) < len(targets):
            return INF
        best = max(best, max(found.values()))
    return best


def _orderings(v: int, e: frozenset) -> list[tuple[int, ...]]:
    rest = sorted(e - {v})
    return [(v,) + p for p in permutations(rest)]


def max_diam_subgraph_edges(n: int, edges: Iterable[Sequence[int]], d: int) -> int:
    """Max edge count of an induced subgraph with diameter <= d.

    Exhaustive over vertex subsets (n <= 14).  Restricting to induced
    subgraphs loses nothing: adding edges on a fixed vertex set never
    increases the diameter.
    """
    if n > MAX_ORACLE_VERTICES:
        raise SizeCapError(f"exhaustive search capped at {MAX_ORACLE_VERTICES} vertices, got {n}")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best = 0
    for mask in range(1, 1 << n):
        count = 0
        bits = mask
        while bits:
            low = bits & -bits
            count += (adj[low.bit_length() - 1] & mask).bit_count()
            bits ^= low
        count //= 2
        if count <= best:
            continue
        if _within(adj, mask, d):
            best = count
    return best


def _within(adj: list[int], mask: int, d: int) -> bool:
    bits = mask
    while bits:
        low = bits & -bits
        reached = low
        frontier = low
        for _ in range(d):
            grow = 0
            f = frontier
            while f:
                lb = f & -f
                grow |= adj[lb.bit_length() - 1]
                f ^= lb
            grow &= mask & ~reached
            if not grow:
                break
            reached |= grow
            frontier = grow
        if reached != mask:
            return False
        bits ^= low
    return True
