"""Text formats for graphs and hypergraphs.

Graph file::

    n m
    u v        (m lines, 0 <= u, v < n, u != v)

Hypergraph file::

    k n m
    v1 ... vk  (m lines of k distinct ids)

Blank lines and lines starting with ``#`` are skipped.  Errors carry the
1-based line number of the offending line.
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterable

from .graph import Graph
from .hypergraph import Hypergraph


class FormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def _ints(lineno: int, tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> Graph:
    lines = iter(_content_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError(1, "missing header 'n m'") from None
    hv = _ints(lineno, header)
    if len(hv) != 2 or min(hv) < 0:
        raise FormatError(lineno, "header must be two nonnegative integers 'n m'")
    n, m = hv
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, tokens in lines:
        uv = _ints(lineno, tokens)
        if len(uv) != 2:
            raise FormatError(lineno, "edge line must have exactly two ids")
        u, v = uv
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(lineno, f"vertex id out of range [0, {n})")
        if u == v:
            raise FormatError(lineno, f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(lineno, f"duplicate edge {key}")
        seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(lineno if edges else 1, f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def parse_hypergraph(text: str) -> Hypergraph:
    lines = iter(_content_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError(1, "missing header 'k n m'") from None
    hv = _ints(lineno, header)
    if len(hv) != 3 or min(hv) < 0:
        raise FormatError(lineno, "header must be three nonnegative integers 'k n m'")
    k, n, m = hv
    if k < 2:
        raise FormatError(lineno, f"uniformity must be >= 2, got {k}")
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, tokens in lines:
        vs = _ints(lineno, tokens)
        if len(vs) != k:
            raise FormatError(lineno, f"edge line must have exactly {k} ids")
        if any(not 0 <= v < n for v in vs):
            raise FormatError(lineno, f"vertex id out of range [0, {n})")
        key = tuple(sorted(vs))
        if len(set(key)) != k:
            raise FormatError(lineno, "edge has repeated vertices")
        if key in seen:
            raise FormatError(lineno, f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise FormatError(lineno if edges else 1, f"header declares {m} edges, found {len(edges)}")
    return Hypergraph(k, n, edges)


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def format_hypergraph(h: Hypergraph) -> str:
    out = [f"{h.k} {h.n} {h.m}"]
    out.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))


def write_hypergraph(h: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(format_hypergraph(h))


def edge_digest(edges: Iterable[tuple[int, ...]]) -> str:
    """sha256 over the edge sequence in order; ties a report to its input."""
    h = hashlib.sha256()
    for e in edges:
        h.update((" ".join(map(str, e)) + "\n").encode())
    return h.hexdigest()
