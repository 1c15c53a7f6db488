from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, cycle, graphs, path
from lowdiam import oracle
from lowdiam.bounds import sample_count
from lowdiam.cover import (
    MinDegreeError,
    check_min_degree,
    cover_diam5,
    cover_diam6,
    cover_sampling_diam3,
    maximal_scattered_set,
)
from lowdiam.extremal import gen_min_degree_graph
from lowdiam.graph import Graph, bfs_distances, walk_subgraph
from lowdiam.verify import verify_cover

TWO_K4 = Graph(8, [(a + o, b + o) for o in (0, 4) for a in range(4) for b in range(a + 1, 4)])


@st.composite
def dense_graphs(draw):
    """Small graphs together with the largest eps their min degree allows."""
    g = draw(graphs(min_n=2, max_n=9))
    low = min(g.degree(v) for v in range(g.n))
    if low == 0:
        g = g.with_edges(set(g.edges) | {(min(v, (v + 1) % g.n), max(v, (v + 1) % g.n))
                                          for v in range(g.n)})
        low = min(g.degree(v) for v in range(g.n))
    return g, Fraction(low, g.n)


def covered(g, cover):
    return set().union(*cover.parts) == g.edge_set() if cover.parts else g.m == 0


# min degree precondition -----------------------------------------------------------


def test_min_degree_error_names_vertex():
    g = path(4)
    with pytest.raises(MinDegreeError) as info:
        check_min_degree(g, Fraction(1, 2))
    assert info.value.vertex == 0
    for fn in (cover_diam5, cover_diam6):
        with pytest.raises(MinDegreeError):
            fn(g, Fraction(1, 2))
    with pytest.raises(MinDegreeError):
        cover_sampling_diam3(g, Fraction(1, 2), seed=0)


def test_epsilon_range():
    with pytest.raises(ValueError):
        cover_diam6(complete(4), 0)


# sampling cover --------------------------------------------------------------------


def test_sample_count_formula():
    assert sample_count(50, 0.2) == 283
    assert sample_count(4, Fraction(1, 2)) == 16


@pytest.mark.parametrize("seed", range(5))
def test_sampling_k4(seed):
    cov = cover_sampling_diam3(complete(4), Fraction(1, 2), seed)
    assert cov.parts == [complete(4).edge_set()]
    assert cov.fallback_parts == 0
    assert cov.raw_parts == 16


def test_sampling_two_components():
    cov = cover_sampling_diam3(TWO_K4, Fraction(3, 8), seed=3)
    assert covered(TWO_K4, cov)
    assert len(cov.parts) == 2
    assert cov.raw_parts <= sample_count(8, Fraction(3, 8)) + cov.fallback_parts


def test_sampling_deterministic_per_seed():
    g = gen_min_degree_graph(30, 0.4, 6, seed=2)
    a = cover_sampling_diam3(g, Fraction(1, 5), 11)
    b = cover_sampling_diam3(g, Fraction(1, 5), 11)
    assert a.parts == b.parts and a.raw_parts == b.raw_parts


@settings(max_examples=40, deadline=None)
@given(dense_graphs(), st.integers(0, 2**32 - 1))
def test_sampling_always_covers(g_eps, seed):
    g, eps = g_eps
    cov = cover_sampling_diam3(g, eps, seed)
    assert covered(g, cov)
    assert all(oracle.edge_set_diameter(p) <= 3 for p in cov.parts)
    sampled = cov.parts[:len(cov.parts) - cov.fallback_parts]
    assert len(sampled) == len(set(sampled))


# scattered sets --------------------------------------------------------------------


def test_scattered_examples():
    assert maximal_scattered_set(path(4)) == [0, 3]
    assert maximal_scattered_set(complete(4)) == [0]
    assert maximal_scattered_set(TWO_K4) == [0, 4]


@given(graphs())
def test_scattered_is_maximal(g):
    chosen = maximal_scattered_set(g)
    dist = {v: bfs_distances(g, v) for v in chosen}
    for i, v in enumerate(chosen):
        for w in chosen[i + 1:]:
            assert dist[v][w] > 2
    for u in range(g.n):
        assert any(dist[v][u] <= 2 for v in chosen)


@given(dense_graphs())
def test_scattered_size_bound(g_eps):
    g, eps = g_eps
    chosen = maximal_scattered_set(g)
    closed = [g.adj[v] | {v} for v in chosen]
    for i in range(len(closed)):
        for j in range(i + 1, len(closed)):
            assert not (closed[i] & closed[j])
    # disjoint closed neighbourhoods of size >= 1 + eps*n
    assert len(chosen) * (1 + eps * g.n) <= g.n


# deterministic covers --------------------------------------------------------------


def test_diam5_examples():
    cov = cover_diam5(TWO_K4, Fraction(3, 8))
    assert len(cov.parts) == 2 and len(cov.parts) < (Fraction(8, 3)) ** 2
    assert len(cover_diam5(complete(4), Fraction(1, 2)).parts) == 1
    c5 = cover_diam5(cycle(5), Fraction(2, 5))
    assert c5.parts == [cycle(5).edge_set()]


def test_diam6_examples():
    cov = cover_diam6(TWO_K4, Fraction(3, 8))
    assert len(cov.parts) == 2 < Fraction(8, 3)
    for n in (3, 5, 7):
        assert len(cover_diam6(complete(n), Fraction(n - 1, n)).parts) == 1
    c6 = cover_diam6(cycle(6), Fraction(1, 3))
    assert maximal_scattered_set(cycle(6)) == [0, 3]
    assert c6.parts == [cycle(6).edge_set()] * 2


@settings(max_examples=60, deadline=None)
@given(dense_graphs())
def test_deterministic_covers_verify(g_eps):
    g, eps = g_eps
    for fn, cap in ((cover_diam5, 5), (cover_diam6, 6)):
        cov = fn(g, eps)
        assert cov.diam_cap == cap
        report = verify_cover(g, cov)
        assert all(d <= cap for d in report.diameters)


@settings(max_examples=60, deadline=None)
@given(dense_graphs())
def test_deterministic_cover_counts(g_eps):
    g, eps = g_eps
    centres = len(maximal_scattered_set(g))
    assert len(cover_diam6(g, eps).parts) == centres
    assert len(cover_diam6(g, eps).parts) < 1 / eps
    assert len(cover_diam5(g, eps).parts) <= centres + centres * (centres - 1) // 2
    assert len(cover_diam5(g, eps).parts) < 1 / eps**2


@given(graphs(min_n=2, max_n=9), st.data())
def test_walk_part_contains_edges_between_closed_neighbourhoods(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    w = data.draw(st.integers(0, g.n - 1))
    near_v, near_w = g.adj[v] | {v}, g.adj[w] | {w}
    wanted = {e for e in g.edges
              if (e[0] in near_v and e[1] in near_w) or (e[1] in near_v and e[0] in near_w)}
    if not wanted:
        return
    assert wanted <= walk_subgraph(g, v, w, 3).edges
