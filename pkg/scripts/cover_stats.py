"""Cover sizes on random graphs conditioned on minimum degree >= eps * n."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction
from statistics import mean

from lowdiam.bounds import sample_count
from lowdiam.cover import cover_diam5, cover_diam6, cover_sampling_diam3
from lowdiam.extremal import gen_min_degree_graph
from lowdiam.verify import verify_cover


@dataclass
class CoverConfig:
    n: int = 50
    p: float = 0.3
    eps: Fraction = Fraction(1, 5)
    seeds: int = 20


def run(cfg: CoverConfig) -> dict[str, list[int]]:
    sizes: dict[str, list[int]] = {"sampling_diam3": [], "cover_diam5": [], "cover_diam6": []}
    fallback_free = 0
    for seed in range(cfg.seeds):
        g = gen_min_degree_graph(cfg.n, cfg.p, cfg.eps * cfg.n, seed)
        sampled = cover_sampling_diam3(g, cfg.eps, seed)
        fallback_free += sampled.fallback_parts == 0
        for cov in (sampled, cover_diam5(g, cfg.eps), cover_diam6(g, cfg.eps)):
            sizes[cov.algorithm].append(verify_cover(g, cov).part_count)
    print(f"n={cfg.n} p={cfg.p} eps={cfg.eps} seeds={cfg.seeds} samples={sample_count(cfg.n, cfg.eps)}")
    for name, vals in sizes.items():
        print(f"  {name:15s} mean {mean(vals):7.2f}  max {max(vals)}")
    print(f"  sampling runs without fallback: {fallback_free}/{cfg.seeds}")
    return sizes


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=CoverConfig.n)
    ap.add_argument("--p", type=float, default=CoverConfig.p)
    ap.add_argument("--eps", type=Fraction, default=CoverConfig.eps)
    ap.add_argument("--seeds", type=int, default=CoverConfig.seeds)
    args = ap.parse_args(argv)
    run(CoverConfig(args.n, args.p, args.eps, args.seeds))


if __name__ == "__main__":
    main()
