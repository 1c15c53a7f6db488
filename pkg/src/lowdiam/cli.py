"""``ldd`` command line.

Exit codes: 0 verified, 1 verification failure, 2 usage or parse error,
3 size-cap refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import extremal
from .cover import MinDegreeError, cover_diam5, cover_diam6, cover_sampling_diam3
from .decompose import (
    decompose_diam3,
    decompose_diam4,
    decompose_hyper_diam3,
    decompose_stars,
    prune_to_diam2,
)
from .errors import SizeCapError
from .graph import blow_up
from .io import FormatError, read_graph, read_hypergraph, write_graph
from .report import Report
from .verify import VerificationError, check_report, input_info, max_diam_subgraph_edges, verify_cover, verify_partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, (time.perf_counter() - start) * 1000.0


def cmd_decompose(args) -> int:
    if args.hyper:
        if args.diam != 3:
            raise SystemExit("hypergraph decomposition supports --diam 3 only")
        obj = read_hypergraph(args.input)
        part, ms = _timed(decompose_hyper_diam3, obj, args.epsilon)
    else:
        obj = read_graph(args.input)
        if args.diam == 2:
            method = args.method or ("prune" if args.epsilon >= Fraction(1, 4) else "stars")
            fn = prune_to_diam2 if method == "prune" else decompose_stars
            part, ms = _timed(fn, obj)
        elif args.diam == 3:
            part, ms = _timed(decompose_diam3, obj, args.epsilon)
        else:
            part, ms = _timed(decompose_diam4, obj, args.epsilon)
    report = verify_partition(obj, part, input_info(obj, path=str(args.input)), ms)
    report.write(args.report)
    print(f"{report.algorithm}: {report.part_count} parts, |e0|={report.e0_size}, "
          f"bound={report.bound}, within_bound={report.within_bound}")
    return EXIT_OK


def cmd_cover(args) -> int:
    g = read_graph(args.input)
    if args.diam == 3:
        cov, ms = _timed(cover_sampling_diam3, g, args.epsilon, args.seed)
    elif args.diam == 5:
        cov, ms = _timed(cover_diam5, g, args.epsilon)
    else:
        cov, ms = _timed(cover_diam6, g, args.epsilon)
    report = verify_cover(g, cov, input_info(g, path=str(args.input)), ms)
    report.write(args.report)
    print(f"{report.algorithm}: {report.part_count} parts, fallback={report.fallback_parts}, "
          f"bound={report.bound}, within_bound={report.within_bound}")
    return EXIT_OK


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise SystemExit(f"family {args.family} needs {' '.join(missing)}")
    return [getattr(args, n) for n in names]


def cmd_gen(args) -> int:
    fam = args.family
    seed = args.seed
    if fam == "bipartite":
        n, p = _need(args, "n", "p")
        gen = extremal.gen_random_bipartite(n, p, seed)
    elif fam == "cliques":
        n, t = _need(args, "n", "t")
        gen = extremal.gen_disjoint_cliques(n, t)
    elif fam == "kneser":
        n, k = _need(args, "n", "k")
        gen = extremal.gen_kneser(n, k)
    elif fam == "incidence":
        n, k = _need(args, "n", "k")
        gen = extremal.gen_incidence(n, k)
    elif fam == "hkt":
        n, k, t = _need(args, "n", "k", "t")
        gen = extremal.gen_hkt(n, k, t)
    elif fam == "hk":
        (k,) = _need(args, "k")
        gen = extremal.gen_Hk(k)
    elif fam == "fk":
        (k,) = _need(args, "k")
        gen = extremal.gen_Fk(k)
    elif fam == "diam5":
        k, d = _need(args, "k", "d")
        gen = extremal.gen_diam5_lower(k, d, seed)
    elif fam == "blowup":
        src, r = _need(args, "input", "r")
        base = read_graph(src)
        gen = extremal.Generated(blow_up(base, r), "blowup", {"r": r, "source": str(src)})
    else:
        t, r = _need(args, "t", "r")
        gen = extremal.diam3_lowerbound_recipe(t, r, seed)
    write_graph(gen.graph, args.out)
    meta_path = Path(str(args.out) + ".meta.json")
    meta_path.write_text(json.dumps(gen.metadata(), indent=2) + "\n")
    print(f"{gen.family}: n={gen.graph.n} m={gen.graph.m} -> {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = Report.read(args.report)
    obj = read_hypergraph(args.input) if report.input.get("type") == "hypergraph" else read_graph(args.input)
    check_report(report, obj)
    print(f"ok: {report.kind} {report.algorithm}, {report.part_count} parts, diameters <= {report.diam}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = read_graph(args.input)
    print(max_diam_subgraph_edges(g, args.diam))
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g = read_graph(args.input)
    print(extremal.exact_chromatic(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ldd", description="Low-diameter edge decompositions and covers.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="partition edges into low-diameter parts plus e0")
    d.add_argument("--diam", type=int, choices=(2, 3, 4), required=True)
    d.add_argument("--epsilon", type=_fraction, required=True)
    d.add_argument("--input", type=Path, required=True)
    d.add_argument("--report", type=Path, required=True)
    d.add_argument("--hyper", action="store_true", help="input is a k-uniform hypergraph file")
    d.add_argument("--method", choices=("stars", "prune"),
                   help="diameter-2 method (default: prune when epsilon >= 1/4, else stars)")
    d.set_defaults(func=cmd_decompose)

    c = sub.add_parser("cover", help="cover all edges of a high-min-degree graph")
    c.add_argument("--diam", type=int, choices=(3, 5, 6), required=True)
    c.add_argument("--epsilon", type=_fraction, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--input", type=Path, required=True)
    c.add_argument("--report", type=Path, required=True)
    c.set_defaults(func=cmd_cover)

    g = sub.add_parser("gen", help="generate an extremal or random fixture")
    g.add_argument("--family", required=True, choices=(
        "bipartite", "cliques", "kneser", "incidence", "hkt", "hk", "fk",
        "diam5", "blowup", "recipe-diam3"))
    for name in ("n", "k", "t", "r", "d"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--input", type=Path, help="source graph for --family blowup")
    g.add_argument("--out", type=Path, required=True)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="re-verify a report against its input")
    v.add_argument("--input", type=Path, required=True)
    v.add_argument("--report", type=Path, required=True)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser(
        "oracle",
        help="max edges of a subgraph with diameter <= D (exhaustive over induced "
             "subgraphs, which suffices since extra edges never raise the diameter)")
    o.add_argument("--diam", type=int, required=True)
    o.add_argument("--input", type=Path, required=True)
    o.set_defaults(func=cmd_oracle)

    ch = sub.add_parser("chromatic", help="exact chromatic number (at most 16 vertices)")
    ch.add_argument("--input", type=Path, required=True)
    ch.set_defaults(func=cmd_chromatic)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SizeCapError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_USAGE
        raise
    except (FormatError, MinDegreeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
