"""k-uniform hypergraphs with the tight-path metric.

A tight path of length l is a sequence of l+k-1 distinct vertices in which
every k consecutive vertices form an edge.  Shortest tight paths are found
in two stages: a BFS over ordered (k-1)-windows that ignores the
distinctness requirement gives a lower bound, then an iterative-deepening
search over genuine (distinct-vertex) paths starts from that bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations, product
from collections import deque
from typing import Iterable, Sequence

from .errors import SizeCapError

INF = math.inf

HEdge = tuple[int, ...]

MAX_PATTERN_VERTICES = 10


class Hypergraph:
    __slots__ = ("k", "n", "edges", "_edge_set", "_completions")

    def __init__(self, k: int, n: int, edges: Iterable[Sequence[int]] = ()):
        if k < 2:
            raise ValueError(f"uniformity must be >= 2, got {k}")
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        ordered: list[HEdge] = []
        seen: set[HEdge] = set()
        for raw in edges:
            e = tuple(sorted(int(x) for x in raw))
            if len(e) != k or len(set(e)) != k:
                raise ValueError(f"edge {tuple(raw)} is not a set of {k} distinct vertices")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e} out of range for n={n}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            ordered.append(e)
        self.k = k
        self.n = n
        self.edges: tuple[HEdge, ...] = tuple(ordered)
        self._edge_set = frozenset(ordered)
        self._completions: dict[HEdge, frozenset[int]] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[HEdge]:
        return self._edge_set

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self._edge_set

    def completions(self) -> dict[HEdge, frozenset[int]]:
        """Map each sorted (k-1)-set to the vertices that complete it to an edge."""
        if self._completions is None:
            comp: dict[HEdge, set[int]] = {}
            for e in self.edges:
                for i in range(self.k):
                    comp.setdefault(e[:i] + e[i + 1:], set()).add(e[i])
            self._completions = {s: frozenset(x) for s, x in comp.items()}
        return self._completions

    def vertices_spanned(self) -> set[int]:
        return {v for e in self.edges for v in e}

    def with_edges(self, edges: Iterable[HEdge]) -> Hypergraph:
        return Hypergraph(self.k, self.n, sorted(edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.k, self.n, self._edge_set) == (other.k, other.n, other._edge_set)

    def __hash__(self) -> int:
        return hash((self.k, self.n, self._edge_set))

    def __repr__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.m})"


@dataclass(frozen=True)
class SubHypergraph:
    vertices: frozenset[int]
    edges: frozenset[HEdge]

    def __len__(self) -> int:
        return len(self.edges)


def _check_vertex(h: Hypergraph, v: int) -> None:
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range for n={h.n}")


def _key(window: Iterable[int]) -> HEdge:
    return tuple(sorted(window))


def relaxed_distances(h: Hypergraph, v: int) -> dict[int, int]:
    """Window-BFS distances from ``v`` allowing repeated vertices.

    Every genuine tight path is such a window walk, so these values are
    lower bounds on the tight distance.
    """
    comp = h.completions()
    k = h.k
    starts = set()
    for e in h.edges:
        if v in e:
            rest = [x for x in e if x != v]
            for perm in permutations(rest, k - 2):
                starts.add((v,) + perm)
    depth = {s: 0 for s in starts}
    queue = deque(sorted(starts))
    reach: dict[int, int] = {}
    while queue:
        s = queue.popleft()
        d = depth[s]
        for x in comp.get(_key(s), ()):
            if x in s:
                continue
            if x not in reach:
                reach[x] = d + 1
            nxt = s[1:] + (x,)
            if nxt not in depth:
                depth[nxt] = d + 1
                queue.append(nxt)
    reach.pop(v, None)
    return reach


def _exists_path(h: Hypergraph, v: int, w: int, length: int) -> bool:
    """Is there a distinct-vertex tight path of exactly ``length`` from v to w?"""
    comp = h.completions()
    k = h.k
    total = length + k - 1

    def extend(seq: list[int], used: set[int]) -> bool:
        if len(seq) == total:
            return seq[-1] == w
        last_slot = len(seq) == total - 1
        for x in sorted(comp.get(_key(seq[len(seq) - k + 1:]), ())):
            if x in used:
                continue
            if (x == w) != last_slot:
                continue
            seq.append(x)
            used.add(x)
            if extend(seq, used):
                return True
            seq.pop()
            used.discard(x)
        return False

    for e in h.edges:
        if v not in e:
            continue
        if length >= 2 and w in e:
            continue
        rest = [x for x in e if x != v]
        for perm in permutations(rest):
            seq = [v, *perm]
            if length == 1:
                if seq[-1] == w:
                    return True
                continue
            if extend(seq, set(seq)):
                return True
    return False


def tight_distance(h: Hypergraph, v: int, w: int, lower: int | None = None) -> int | float:
    """Length of a shortest tight path with endpoints ``v`` and ``w``."""
    _check_vertex(h, v)
    _check_vertex(h, w)
    if v == w:
        raise ValueError("tight distance needs two distinct vertices")
    if lower is None:
        lower = relaxed_distances(h, v).get(w)
        if lower is None:
            return INF
    span = len(h.vertices_spanned())
    for length in range(max(1, lower), span - h.k + 2):
        if _exists_path(h, v, w, length):
            return length
    return INF


def tight_distance_at_most(h: Hypergraph, v: int, w: int, bound: int) -> bool:
    """Bounded check used where only "within ``bound``" matters."""
    if v == w:
        return True
    return any(_exists_path(h, v, w, ell) for ell in range(1, bound + 1))


def _standalone(h: Hypergraph, edges: Iterable[Sequence[int]]) -> Hypergraph:
    chosen = []
    for e in edges:
        key = tuple(sorted(e))
        if key not in h.edge_set():
            raise ValueError(f"{key} is not an edge of the hypergraph")
        chosen.append(key)
    return Hypergraph(h.k, h.n, sorted(set(chosen)))


def tight_diameter(h: Hypergraph, edges: Iterable[Sequence[int]] | None = None) -> int | float:
    """Tight diameter of the subhypergraph with the given edges (all of ``h`` by default)."""
    sub = h if edges is None else _standalone(h, edges)
    verts = sorted(sub.vertices_spanned())
    if not verts:
        return 0
    best = 0
    lower = {v: relaxed_distances(sub, v) for v in verts}
    for i, v in enumerate(verts):
        for w in verts[i + 1:]:
            lb = lower[v].get(w)
            if lb is None:
                return INF
            d = tight_distance(sub, v, w, lower=lb)
            if d == INF:
                return INF
            best = max(best, d)
    return best


def link_subhypergraph(h: Hypergraph, e: Sequence[int]) -> SubHypergraph:
    """Induced subhypergraph on the edges meeting ``e`` in at least k-1 vertices."""
    key = tuple(sorted(e))
    if key not in h.edge_set():
        raise ValueError(f"{key} is not an edge of the hypergraph")
    comp = h.completions()
    verts = set(key)
    for i in range(h.k):
        verts.update(comp.get(key[:i] + key[i + 1:], ()))
    inside = frozenset(f for f in h.edges if verts.issuperset(f))
    return SubHypergraph(frozenset(verts), inside)


def count_labeled_copies(host: Hypergraph, pattern: Hypergraph) -> int:
    """Number of injective maps pattern -> host sending edges to edges."""
    if host.k != pattern.k:
        raise ValueError(f"uniformity mismatch: host {host.k}, pattern {pattern.k}")
    if pattern.n > MAX_PATTERN_VERTICES:
        raise SizeCapError(
            f"pattern has {pattern.n} vertices; brute force is capped at {MAX_PATTERN_VERTICES}"
        )
    if pattern.n > host.n:
        return 0
    # Place pattern vertices in order of first appearance in edges so each
    # edge gets checked as soon as its last vertex is mapped.
    order: list[int] = []
    for e in pattern.edges:
        for x in e:
            if x not in order:
                order.append(x)
    isolated = [x for x in range(pattern.n) if x not in order]
    pos = {x: i for i, x in enumerate(order)}
    closes: list[list[HEdge]] = [[] for _ in order]
    for e in pattern.edges:
        closes[max(pos[x] for x in e)].append(e)
    host_edges = host.edge_set()
    image: dict[int, int] = {}
    used: set[int] = set()

    def place(i: int) -> int:
        if i == len(order):
            free = host.n - len(order)
            return math.perm(free, len(isolated))
        total = 0
        x = order[i]
        for y in range(host.n):
            if y in used:
                continue
            image[x] = y
            if all(tuple(sorted(image[z] for z in e)) in host_edges for e in closes[i]):
                used.add(y)
                total += place(i + 1)
                used.discard(y)
        del image[x]
        return total

    return place(0)


def make_pattern_Hk(k: int) -> Hypergraph:
    """H^k on v_i = i and w_i = k + i: edges V, W and {w_i} + V - {v_i}."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    vs = list(range(k))
    ws = list(range(k, 2 * k))
    edges = [vs, ws]
    edges += [[ws[i]] + [v for v in vs if v != vs[i]] for i in range(k)]
    return Hypergraph(k, 2 * k, edges)


def make_pattern_K2k(k: int) -> Hypergraph:
    """Complete k-partite k-graph with parts {i, k + i}."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    parts = [(i, k + i) for i in range(k)]
    return Hypergraph(k, 2 * k, list(product(*parts)))


def complete_hypergraph(k: int, n: int) -> Hypergraph:
    return Hypergraph(k, n, combinations(range(n), k))
