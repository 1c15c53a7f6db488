from __future__ import annotations

from contextlib import contextmanager
from itertools import combinations

import pytest
from hypothesis import strategies as st

from lowdiam.graph import Graph
from lowdiam.hypergraph import Hypergraph

ACCEPTANCE: list[tuple[str, bool, str]] = []


@contextmanager
def criterion(name: str):
    """Record a pass/fail line for an acceptance criterion."""
    info: dict = {}
    try:
        yield info
    except BaseException:
        ACCEPTANCE.append((name, False, info.get("detail", "")))
        print(f"FAIL  {name}  {info.get('detail', '')}")
        raise
    ACCEPTANCE.append((name, True, info.get("detail", "")))
    print(f"PASS  {name}  {info.get('detail', '')}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def hypergraphs(draw, k=3, min_n=3, max_n=7, max_edges=12):
    n = draw(st.integers(min_n, max_n))
    cands = list(combinations(range(n), k))
    chosen = draw(st.lists(st.sampled_from(cands), unique=True, max_size=max_edges))
    return Hypergraph(k, n, chosen)


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def floyd_warshall(g: Graph) -> list[list[float]]:
    """All-pairs distances, written independently of the library's BFS."""
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


@pytest.fixture
def c6() -> Graph:
    return cycle(6)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def p4() -> Graph:
    return path(4)
