"""Inspect the lower-bound constructions at desk scale.

Prints clique extraction counts, Kneser chromatic numbers, the component
structure of F_1, and cross-copy distances in the diameter-5 construction.
"""

from __future__ import annotations

import argparse
import math
from fractions import Fraction

from lowdiam import oracle
from lowdiam.decompose import decompose_diam4
from lowdiam.extremal import exact_chromatic, gen_diam5_lower, gen_disjoint_cliques, gen_Fk, gen_kneser
from lowdiam.graph import bfs_distances, connected_components, induced_edges


def cliques(max_t: int) -> None:
    print("disjoint cliques, n = 8t, eps = 1/8t")
    for t in range(2, max_t + 1):
        eps = Fraction(1, 8 * t)
        part = decompose_diam4(gen_disjoint_cliques(8 * t, t).graph, eps)
        print(f"  t={t:2d}  parts={part.num_parts:3d}  1/(16 eps)={float(1 / (16 * eps)):.1f}")


def kneser() -> None:
    print("Kneser chromatic numbers")
    for n, k in ((4, 1), (5, 1), (5, 2), (6, 2), (7, 2), (7, 3), (8, 3)):
        g = gen_kneser(n, k).graph
        if g.n > 16:
            continue
        print(f"  KG({n},{k})  chi={exact_chromatic(g)}  n-2k+2={n - 2 * k + 2}")


def fk() -> None:
    g = gen_Fk(1).graph
    comps = connected_components(g)
    diams = [oracle.edge_set_diameter(induced_edges(g, c)) for c in comps]
    print(f"F_1: n={g.n} m={g.m} components={len(comps)} diameters={diams}")


def diam5(k: int, d: int) -> None:
    gen = gen_diam5_lower(k, d)
    g, classes = gen.graph, gen.classes
    for letter in "AB":
        low = math.inf
        for j in range(2):
            for i in range(d):
                for v in classes[f"{letter}_{i}_{j}"]:
                    dist = bfs_distances(g, v)
                    for i2 in range(d):
                        if i2 != i:
                            low = min(low, min(dist[w] for w in classes[f"{letter}_{i2}_{j}"]))
        print(f"diam5 k={k} d={d}: min cross-copy {letter} distance {low}")


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-t", type=int, default=8)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--d", type=int, default=2)
    args = ap.parse_args(argv)
    cliques(args.max_t)
    kneser()
    fk()
    diam5(args.k, args.d)


if __name__ == "__main__":
    main()
