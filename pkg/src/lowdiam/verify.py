"""Recompute every guarantee of a partition or cover from scratch.

Diameters come from :mod:`lowdiam.oracle`, never from the producer.  Any
breach raises :class:`VerificationError` naming the part and the predicate
that failed; success returns a :class:`~lowdiam.report.Report`.
"""

from __future__ import annotations

from fractions import Fraction

from . import oracle
from .bounds import bound_formula
from .cover import EdgeCover
from .decompose import EdgePartition, as_fraction, part_count_bound
from .graph import Graph
from .hypergraph import Hypergraph
from .io import edge_digest
from .report import Report, decode_diameter, encode_diameter

COVER_BOUNDS = {
    "sampling_diam3": "sampling_diam3",
    "cover_diam5": "cover5_upper",
    "cover_diam6": "cover6_upper",
}


class VerificationError(Exception):
    def __init__(self, predicate: str, message: str, part: int | None = None):
        where = f"part {part}: " if part is not None else ""
        super().__init__(f"{predicate}: {where}{message}")
        self.predicate = predicate
        self.part = part


def input_info(obj: Graph | Hypergraph, **extra) -> dict:
    info = {
        "type": "hypergraph" if isinstance(obj, Hypergraph) else "graph",
        "n": obj.n,
        "m": obj.m,
        "sha256": edge_digest(obj.edges),
    }
    if isinstance(obj, Hypergraph):
        info["k"] = obj.k
    info.update({k: v for k, v in extra.items() if v is not None})
    return info


def _uniformity(obj) -> int:
    return obj.k if isinstance(obj, Hypergraph) else 2


def _normalise(edge) -> tuple[int, ...]:
    return tuple(sorted(int(x) for x in edge))


def _part_diameter(obj, part) -> int | float:
    if isinstance(obj, Hypergraph):
        return oracle.tight_path_diameter(part, obj.k)
    return oracle.edge_set_diameter(part)


def _check_membership(obj, parts, e0) -> dict:
    index = {e: i for i, e in enumerate(obj.edges)}
    for label, edges in [("e0", e0)] + [(i, p) for i, p in enumerate(parts)]:
        for e in edges:
            if _normalise(e) not in index:
                raise VerificationError(
                    "membership", f"{_normalise(e)} is not an input edge",
                    None if label == "e0" else label,
                )
    return index


def _check_diameters(obj, parts, cap: int) -> list[int | float]:
    diams = []
    for i, p in enumerate(parts):
        d = _part_diameter(obj, p)
        if d > cap:
            raise VerificationError("diameter", f"diameter {d} exceeds cap {cap}", i)
        diams.append(d)
    return diams


def verify_partition(obj: Graph | Hypergraph, partition: EdgePartition,
                     info: dict | None = None, elapsed_ms: float = 0.0) -> Report:
    parts = [{_normalise(e) for e in p} for p in partition.parts]
    e0 = {_normalise(e) for e in partition.e0}
    index = _check_membership(obj, parts, e0)

    owner: dict[tuple, str] = {e: "e0" for e in e0}
    for i, p in enumerate(parts):
        for e in p:
            if e in owner:
                raise VerificationError("disjointness", f"edge {e} also in {owner[e]}", i)
            owner[e] = f"part {i}"
    missing = [e for e in obj.edges if e not in owner]
    if missing:
        raise VerificationError("union", f"{len(missing)} edges uncovered, e.g. {missing[0]}")

    eps = as_fraction(partition.epsilon)
    budget = eps * obj.n ** _uniformity(obj)
    if len(e0) > budget:
        raise VerificationError("e0_budget", f"|e0| = {len(e0)} > eps*n^k = {budget}")

    diams = _check_diameters(obj, parts, partition.diam_cap)
    bound = None
    if isinstance(obj, Graph):
        bound = part_count_bound(partition.algorithm, obj.n, eps)
    return Report(
        kind="partition",
        input=info if info is not None else input_info(obj),
        algorithm=partition.algorithm,
        epsilon=str(eps),
        diam=partition.diam_cap,
        parts=[sorted(index[e] for e in p) for p in parts],
        e0=sorted(index[e] for e in e0),
        diameters=[encode_diameter(d) for d in diams],
        part_count=len(parts),
        e0_size=len(e0),
        bound=bound,
        within_bound=None if bound is None else len(parts) <= bound,
        fallback_parts=partition.fallback_parts,
        raw_parts=None,
        seed=None,
        elapsed_ms=elapsed_ms,
    )


def verify_cover(g: Graph, cover: EdgeCover, info: dict | None = None,
                 elapsed_ms: float = 0.0) -> Report:
    parts = [{_normalise(e) for e in p} for p in cover.parts]
    index = _check_membership(g, parts, set())
    covered = set().union(*parts) if parts else set()
    for e in g.edges:
        if e not in covered:
            raise VerificationError("coverage", f"edge {e} is in no part")
    diams = _check_diameters(g, parts, cover.diam_cap)
    bound = None
    if cover.algorithm in COVER_BOUNDS and cover.epsilon:
        bound = bound_formula(COVER_BOUNDS[cover.algorithm], n=g.n, eps=cover.epsilon)
    return Report(
        kind="cover",
        input=info if info is not None else input_info(g),
        algorithm=cover.algorithm,
        epsilon=None if cover.epsilon is None else str(as_fraction(cover.epsilon)),
        diam=cover.diam_cap,
        parts=[sorted(index[e] for e in p) for p in parts],
        e0=[],
        diameters=[encode_diameter(d) for d in diams],
        part_count=len(parts),
        e0_size=0,
        bound=bound,
        within_bound=None if bound is None else len(parts) <= bound,
        fallback_parts=cover.fallback_parts,
        raw_parts=cover.raw_parts,
        seed=cover.seed,
        elapsed_ms=elapsed_ms,
    )


def max_diam_subgraph_edges(g: Graph, d: int) -> int:
    """Largest edge count of a subgraph of ``g`` with diameter <= d (n <= 14).

    The search ranges over induced subgraphs only, which is exact because
    adding edges on a fixed vertex set cannot raise the diameter.
    """
    return oracle.max_diam_subgraph_edges(g.n, g.edges, d)


def _edges_at(obj, indices: list[int], what: str) -> frozenset:
    out = []
    for i in indices:
        if not 0 <= i < obj.m:
            raise VerificationError("membership", f"{what} refers to edge index {i} of {obj.m}")
        out.append(obj.edges[i])
    return frozenset(out)


def check_report(report: Report, obj: Graph | Hypergraph) -> Report:
    """Re-verify a stored report against its input and compare the numbers."""
    expected = input_info(obj)
    for key in ("type", "n", "m", "sha256"):
        if report.input.get(key) != expected[key]:
            raise VerificationError(
                "input", f"report {key}={report.input.get(key)!r} but input has {expected[key]!r}"
            )
    parts = [_edges_at(obj, p, "part") for p in report.parts]
    eps = Fraction(report.epsilon) if report.epsilon is not None else None
    if report.kind == "partition":
        e0 = _edges_at(obj, report.e0, "e0")
        fresh = verify_partition(
            obj,
            EdgePartition(e0, parts, eps, report.diam, report.algorithm, report.fallback_parts),
            report.input,
            report.elapsed_ms,
        )
    elif report.kind == "cover":
        if not isinstance(obj, Graph):
            raise VerificationError("input", "covers are defined for graphs only")
        fresh = verify_cover(
            obj,
            EdgeCover(parts, report.diam, eps, report.algorithm, report.seed,
                      report.fallback_parts, report.raw_parts or 0),
            report.input,
            report.elapsed_ms,
        )
    else:
        raise VerificationError("schema", f"unknown report kind {report.kind!r}")
    for name in ("diameters", "part_count", "e0_size", "within_bound"):
        if getattr(fresh, name) != getattr(report, name):
            raise VerificationError(
                name, f"report says {getattr(report, name)!r}, recomputed {getattr(fresh, name)!r}"
            )
    if report.bound is not None and fresh.bound is not None and abs(report.bound - fresh.bound) > 1e-9 * max(1.0, fresh.bound):
        raise VerificationError("bound", f"report says {report.bound}, recomputed {fresh.bound}")
    return fresh


__all__ = [
    "VerificationError",
    "check_report",
    "decode_diameter",
    "input_info",
    "max_diam_subgraph_edges",
    "verify_cover",
    "verify_partition",
]
