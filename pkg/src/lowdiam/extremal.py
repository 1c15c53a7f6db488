"""Generators for the lower-bound constructions and random test families.

Random families draw from ``numpy.random.default_rng(seed)`` and are
bit-reproducible per (parameters, seed).  k-subsets are numbered in
lexicographic order wherever they become vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import SizeCapError
from .graph import Graph, Subgraph, blow_up, induced_subgraph
from .hypergraph import Hypergraph

MAX_EDGES = 5_000_000
MAX_CHROMATIC_VERTICES = 16


@dataclass
class Generated:
    """A generated graph plus the metadata written next to it."""

    graph: Graph
    family: str
    params: dict
    seed: int | None = None
    classes: dict[str, list[int]] = field(default_factory=dict)

    def metadata(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "seed": self.seed,
            "n": self.graph.n,
            "m": self.graph.m,
            "classes": self.classes,
        }


def _check_edges(count: int) -> None:
    if count > MAX_EDGES:
        raise SizeCapError(f"construction would have {count} edges (cap {MAX_EDGES})")


def a_k(k: int) -> int:
    return 4 * math.comb(4 * k, k)


# random families -----------------------------------------------------------


def gen_random_bipartite(n: int, p: float, seed: int) -> Generated:
    """G(n, n, p): classes [0, n) and [n, 2n), each cross pair kept w.p. p."""
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_edges(n * n)
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < p
    us, vs = np.nonzero(mask)
    edges = list(zip(us.tolist(), (vs + n).tolist()))
    g = Graph(2 * n, edges)
    return Generated(
        g, "bipartite", {"n": n, "p": p}, seed,
        {"A": list(range(n)), "B": list(range(n, 2 * n))},
    )


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with pairs visited in lexicographic order."""
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def gen_min_degree_graph(n: int, p: float, min_degree: float, seed: int,
                         max_tries: int = 10_000) -> Graph:
    """G(n, p) conditioned (by rejection on one seeded stream) on min degree."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    for _ in range(max_tries):
        keep = rng.random(iu.size) < p
        g = Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))
        if g.min_degree() >= min_degree:
            return g
    raise RuntimeError(f"no G({n}, {p}) sample with min degree >= {min_degree} in {max_tries} tries")


def gen_random_hypergraph(n: int, k: int, p: float, seed: int) -> Hypergraph:
    rng = np.random.default_rng(seed)
    cands = list(combinations(range(n), k))
    keep = rng.random(len(cands)) < p
    return Hypergraph(k, n, [e for e, x in zip(cands, keep) if x])


# deterministic families ----------------------------------------------------


def gen_disjoint_cliques(n: int, t: int) -> Generated:
    """t disjoint cliques of size n/t on consecutive vertex blocks."""
    if t < 1 or n % t:
        raise ValueError(f"t={t} must divide n={n}")
    size = n // t
    _check_edges(t * math.comb(size, 2))
    edges = [
        (b * size + i, b * size + j)
        for b in range(t)
        for i, j in combinations(range(size), 2)
    ]
    classes = {f"clique_{b}": list(range(b * size, (b + 1) * size)) for b in range(t)}
    return Generated(Graph(n, edges), "cliques", {"n": n, "t": t}, None, classes)


def k_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


def gen_kneser(n: int, k: int, cap: int = 100_000) -> Generated:
    """KG(n, k): k-subsets of [n] (lexicographic ids), adjacent iff disjoint."""
    if not n >= 2 * k >= 2:
        raise ValueError(f"Kneser graph needs n >= 2k >= 2, got n={n}, k={k}")
    count = math.comb(n, k)
    if count > cap:
        raise SizeCapError(f"KG({n},{k}) has {count} vertices (cap {cap})")
    _check_edges(count * math.comb(n - k, k) // 2)
    sets = k_subsets(n, k)
    masks = [sum(1 << x for x in s) for s in sets]
    edges = [
        (i, j)
        for i in range(count)
        for j in range(i + 1, count)
        if not masks[i] & masks[j]
    ]
    return Generated(Graph(count, edges), "kneser", {"n": n, "k": k}, None,
                     {"sets": [list(s) for s in sets]})


def gen_hkt(n: int, k: int, t: int, cap: int = 100_000) -> Generated:
    """H(n, k, t): t copies of IG(n, k) sharing the set class.

    Set S is vertex ``index(S)``; element x of copy c is
    ``C(n, k) + c * n + x``.
    """
    if not n >= k >= 1 or t < 1:
        raise ValueError(f"need n >= k >= 1 and t >= 1, got n={n}, k={k}, t={t}")
    count = math.comb(n, k)
    if count + n * t > cap:
        raise SizeCapError(f"H({n},{k},{t}) has {count + n * t} vertices (cap {cap})")
    _check_edges(count * k * t)
    sets = k_subsets(n, k)
    edges = [
        (i, count + c * n + x)
        for i, s in enumerate(sets)
        for c in range(t)
        for x in s
    ]
    g = Graph(count + n * t, edges)
    return Generated(g, "hkt", {"n": n, "k": k, "t": t}, None, {
        "first": list(range(count)),
        "second": list(range(count, count + n * t)),
    })


def gen_incidence(n: int, k: int, cap: int = 100_000) -> Generated:
    gen = gen_hkt(n, k, 1, cap)
    gen.family = "incidence"
    gen.params = {"n": n, "k": k}
    return gen


def hk_copies(k: int) -> tuple[int, bool]:
    """Number of IG(4k, k) copies in H_k and whether it is exact.

    The intended count C(4k, k) / 4k is an integer only for k = 1 among
    small k; otherwise it is rounded up, which keeps the minimum degree at
    a_k / 16 but loses regularity on the set class.
    """
    num = math.comb(4 * k, k)
    t, rem = divmod(num, 4 * k)
    return (t + (rem > 0), rem == 0)


def gen_Hk(k: int) -> Generated:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    t, exact = hk_copies(k)
    gen = gen_hkt(4 * k, k, t)
    gen.family = "hk"
    gen.params = {"k": k, "t": t, "exact": exact}
    return gen


def gen_Fk(k: int) -> Generated:
    """Two copies of H_k joined by the matching S^1 -- S^2 on the set class."""
    hk = gen_Hk(k)
    h = hk.graph
    sets = len(hk.classes["first"])
    edges = list(h.edges)
    edges += [(u + h.n, v + h.n) for u, v in h.edges]
    edges += [(s, s + h.n) for s in range(sets)]
    g = Graph(2 * h.n, edges)
    classes = {
        "first_1": list(range(sets)),
        "second_1": list(range(sets, h.n)),
        "first_2": list(range(h.n, h.n + sets)),
        "second_2": list(range(h.n + sets, 2 * h.n)),
    }
    return Generated(g, "fk", dict(hk.params), None, classes)


def greedy_coloring(g: Graph) -> list[int]:
    """First-fit colouring in vertex order."""
    colour = [-1] * g.n
    for v in range(g.n):
        taken = {colour[w] for w in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colour[v] = c
    return colour


def kneser_partition(k: int, d: int) -> list[list[int]]:
    """Split KG(4k, k) into d parts, each a union of greedy colour classes.

    Class c goes to part c mod d.
    """
    kg = gen_kneser(4 * k, k).graph
    colour = greedy_coloring(kg)
    parts: list[list[int]] = [[] for _ in range(d)]
    for v, c in enumerate(colour):
        parts[c % d].append(v)
    return parts


def gen_diam5_lower(k: int, d: int, seed: int | None = None,
                    partition: Sequence[Sequence[int]] | None = None) -> Generated:
    """Two rows F_1, F_2 of d copies of H_k with a shifted matching.

    Copy i of row j (0-based) occupies block ``j * d + i``.  A set S in
    part U_b (b = 1..d) links S_{i,1} to S_{i+b mod d, 2}.  The seed is
    recorded only; the construction is deterministic.
    """
    if d < 2:
        raise ValueError(f"construction needs d >= 2, got {d}")
    hk = gen_Hk(k)
    h = hk.graph
    sets = len(hk.classes["first"])
    if partition is None:
        partition = kneser_partition(k, d)
    if len(partition) != d:
        raise ValueError(f"partition must have d={d} parts, got {len(partition)}")
    part_of = {}
    for b, block in enumerate(partition, start=1):
        for s in block:
            if s in part_of:
                raise ValueError(f"set {s} appears in two parts")
            part_of[s] = b
    if sorted(part_of) != list(range(sets)):
        raise ValueError("partition must cover every Kneser vertex exactly once")
    _check_edges(2 * d * h.m + d * sets)

    def base(j: int, i: int) -> int:
        return (j * d + i) * h.n

    edges = []
    classes: dict[str, list[int]] = {}
    for j in range(2):
        for i in range(d):
            off = base(j, i)
            edges += [(u + off, v + off) for u, v in h.edges]
            classes[f"A_{i}_{j}"] = list(range(off, off + sets))
            classes[f"B_{i}_{j}"] = list(range(off + sets, off + h.n))
    for i in range(d):
        for s in range(sets):
            target = (i + part_of[s]) % d
            edges.append((base(0, i) + s, base(1, target) + s))
    g = Graph(2 * d * h.n, edges)
    params = {"k": k, "d": d, "exact": hk.params["exact"],
              "partition": [sorted(p) for p in partition]}
    return Generated(g, "diam5", params, seed, classes)


def exact_chromatic(g: Graph, max_vertices: int = MAX_CHROMATIC_VERTICES) -> int:
    """Chromatic number by backtracking over colour counts 1, 2, ..."""
    if g.n > max_vertices:
        raise SizeCapError(f"exact colouring capped at {max_vertices} vertices, got {g.n}")
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    colour = [-1] * g.n

    def fits(i: int, limit: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colour[w] for w in g.adj[v]}
        # Colours beyond used+1 are symmetric to used, so try at most one new one.
        for c in range(min(limit, used + 1)):
            if c in taken:
                continue
            colour[v] = c
            if fits(i + 1, limit, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    for limit in range(1, g.n + 1):
        if fits(0, limit, 0):
            return limit
    return g.n


def diam3_lowerbound_recipe(t: int, r: int, seed: int) -> Generated:
    """Blow-up by r of G(t, t, 1 / (4 sqrt t))."""
    if t < 1 or r < 1:
        raise ValueError(f"need t >= 1 and r >= 1, got t={t}, r={r}")
    _check_edges(t * t * r * r)
    p = 1 / (4 * math.sqrt(t))
    base = gen_random_bipartite(t, p, seed)
    g = blow_up(base.graph, r)
    classes = {
        "A": [v * r + c for v in base.classes["A"] for c in range(r)],
        "B": [v * r + c for v in base.classes["B"] for c in range(r)],
    }
    return Generated(g, "recipe-diam3", {"t": t, "r": r, "p": p, "base_m": base.graph.m},
                     seed, classes)


def neighborhood_union_subgraph(g: Graph, a: int, b: int) -> Subgraph:
    """Induced subgraph on N(a) | N(b) for an edge ab of a bipartite graph."""
    if not g.has_edge(a, b):
        raise ValueError(f"({a}, {b}) is not an edge")
    return induced_subgraph(g, g.adj[a] | g.adj[b])
