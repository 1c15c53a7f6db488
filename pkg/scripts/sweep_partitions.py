"""Part counts of the diameter-3 and diameter-4 decompositions against eps.

    python3 scripts/sweep_partitions.py --n 100 --p 0.5 --seeds 10
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from lowdiam.decompose import decompose_diam3, decompose_diam4
from lowdiam.extremal import gen_random_graph
from lowdiam.verify import verify_partition


@dataclass
class SweepConfig:
    n: int = 100
    p: float = 0.5
    seeds: int = 10
    eps: list[Fraction] = field(default_factory=lambda: [Fraction(1, d) for d in (5, 10, 20, 50, 100)])


def run(cfg: SweepConfig, out=sys.stdout) -> list[dict]:
    rows = []
    writer = csv.DictWriter(out, ["seed", "eps", "algorithm", "parts", "e0", "bound", "ms"])
    writer.writeheader()
    for seed in range(cfg.seeds):
        g = gen_random_graph(cfg.n, cfg.p, seed)
        for eps in cfg.eps:
            for fn in (decompose_diam3, decompose_diam4):
                start = time.perf_counter()
                part = fn(g, eps)
                ms = (time.perf_counter() - start) * 1000
                report = verify_partition(g, part)
                row = {"seed": seed, "eps": str(eps), "algorithm": report.algorithm,
                       "parts": report.part_count, "e0": report.e0_size,
                       "bound": report.bound, "ms": round(ms, 2)}
                writer.writerow(row)
                rows.append(row)
    return rows


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=SweepConfig.n)
    ap.add_argument("--p", type=float, default=SweepConfig.p)
    ap.add_argument("--seeds", type=int, default=SweepConfig.seeds)
    ap.add_argument("--eps", type=Fraction, nargs="+")
    args = ap.parse_args(argv)
    cfg = SweepConfig(args.n, args.p, args.seeds)
    if args.eps:
        cfg.eps = args.eps
    run(cfg)


if __name__ == "__main__":
    main()
