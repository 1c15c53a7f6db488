from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, hypergraphs
from lowdiam import oracle
from lowdiam.errors import SizeCapError
from lowdiam.graph import bfs_distances
from lowdiam.hypergraph import (
    INF,
    Hypergraph,
    complete_hypergraph,
    count_labeled_copies,
    link_subhypergraph,
    make_pattern_Hk,
    make_pattern_K2k,
    relaxed_distances,
    tight_diameter,
    tight_distance,
    tight_distance_at_most,
)

CHAIN = Hypergraph(3, 6, [(1, 2, 3), (2, 3, 4), (3, 4, 5)])
SPLIT = Hypergraph(3, 6, [(1, 2, 3), (3, 4, 5)])


def brute_tight_distance(h, v, w):
    """Shortest tight path by trying every ordered sequence of distinct vertices."""
    verts = sorted(h.vertices_spanned())
    if v not in verts or w not in verts:
        return INF
    edges = h.edge_set()
    inner = [x for x in verts if x not in (v, w)]
    for total in range(h.k, len(verts) + 1):
        for mid in permutations(inner, total - 2):
            seq = (v,) + mid + (w,)
            if all(tuple(sorted(seq[i:i + h.k])) in edges for i in range(total - h.k + 1)):
                return total - h.k + 1
    return INF


def brute_copies(host, pattern):
    total = 0
    for image in permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[x] for x in e) for e in pattern.edges):
            total += 1
    return total


# construction -----------------------------------------------------------------


def test_rejects_bad_edges():
    with pytest.raises(ValueError):
        Hypergraph(3, 5, [(1, 2)])
    with pytest.raises(ValueError):
        Hypergraph(3, 5, [(1, 1, 2)])
    with pytest.raises(ValueError):
        Hypergraph(3, 5, [(1, 2, 3), (3, 1, 2)])
    with pytest.raises(ValueError):
        Hypergraph(3, 5, [(1, 2, 5)])
    with pytest.raises(ValueError):
        Hypergraph(1, 5, [])


def test_completions_map():
    comp = CHAIN.completions()
    assert comp[(2, 3)] == {1, 4}
    assert comp[(1, 2)] == {3}


# tight distance ---------------------------------------------------------------


def test_chain_distance_is_forced():
    assert tight_distance(CHAIN, 1, 5) == 3
    assert brute_tight_distance(CHAIN, 1, 5) == 3


def test_shared_edge_distance_one():
    assert tight_distance(CHAIN, 1, 3) == 1


def test_split_is_disconnected():
    assert tight_distance(SPLIT, 1, 5) == INF
    assert brute_tight_distance(SPLIT, 1, 5) == INF


def test_distance_argument_errors():
    with pytest.raises(ValueError):
        tight_distance(CHAIN, 1, 1)
    with pytest.raises(ValueError):
        tight_distance(CHAIN, 1, 6)


def test_repeated_vertices_do_not_shorten():
    # window walks may revisit vertices, so they only give a lower bound
    h = Hypergraph(3, 5, [(0, 1, 2), (1, 2, 3), (0, 2, 3), (2, 3, 4)])
    for v, w in combinations(range(5), 2):
        lb = relaxed_distances(h, v).get(w, INF)
        assert lb <= tight_distance(h, v, w) == brute_tight_distance(h, v, w)


@settings(max_examples=60, deadline=None)
@given(hypergraphs(k=3, max_n=6, max_edges=8), st.data())
def test_tight_distance_matches_brute_force(h, data):
    v = data.draw(st.integers(0, h.n - 1))
    w = data.draw(st.integers(0, h.n - 1).filter(lambda x: x != v))
    d = tight_distance(h, v, w)
    assert d == brute_tight_distance(h, v, w)
    assert d == tight_distance(h, w, v)


@settings(max_examples=40, deadline=None)
@given(hypergraphs(k=4, min_n=4, max_n=7, max_edges=10), st.data())
def test_tight_distance_k4_matches_brute_force(h, data):
    v = data.draw(st.integers(0, h.n - 1))
    w = data.draw(st.integers(0, h.n - 1).filter(lambda x: x != v))
    assert tight_distance(h, v, w) == brute_tight_distance(h, v, w)


@given(graphs(min_n=2, max_n=7), st.data())
def test_two_uniform_tight_distance_is_graph_distance(g, data):
    h = Hypergraph(2, g.n, g.edges)
    v = data.draw(st.integers(0, g.n - 1))
    w = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != v))
    expected = bfs_distances(g, v)[w]
    if expected != INF and (g.degree(v) == 0 or g.degree(w) == 0):
        expected = INF
    assert tight_distance(h, v, w) == expected


@settings(max_examples=60, deadline=None)
@given(hypergraphs(k=3, max_n=6, max_edges=8), st.data())
def test_at_most_three_agrees(h, data):
    v = data.draw(st.integers(0, h.n - 1))
    w = data.draw(st.integers(0, h.n - 1).filter(lambda x: x != v))
    assert tight_distance_at_most(h, v, w, 3) == (brute_tight_distance(h, v, w) <= 3)


# tight diameter ---------------------------------------------------------------


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_single_edge_diameter_one(k):
    h = Hypergraph(k, k, [tuple(range(k))])
    assert tight_diameter(h) == 1
    assert oracle.tight_path_diameter(h.edges, k) == 1


def test_chain_and_split_diameters():
    assert tight_diameter(CHAIN) == 3
    assert tight_diameter(SPLIT) == INF
    assert tight_diameter(CHAIN, [(1, 2, 3)]) == 1
    assert tight_diameter(CHAIN, []) == 0


def test_subset_must_be_edges():
    with pytest.raises(ValueError):
        tight_diameter(CHAIN, [(1, 2, 5)])


@settings(max_examples=40, deadline=None)
@given(hypergraphs(k=3, max_n=6, max_edges=8))
def test_diameter_matches_oracle(h):
    assert tight_diameter(h) == oracle.tight_path_diameter(h.edges, 3)


@given(graphs(min_n=1, max_n=7))
def test_two_uniform_diameter_matches_graph(g):
    h = Hypergraph(2, g.n, g.edges)
    assert tight_diameter(h) == oracle.edge_set_diameter(g.edges)


# link construction --------------------------------------------------------------


def test_link_example():
    h = Hypergraph(3, 7, [(1, 2, 3), (2, 3, 4), (4, 5, 6)])
    sub = link_subhypergraph(h, (1, 2, 3))
    assert sub.vertices == {1, 2, 3, 4}
    assert sub.edges == {(1, 2, 3), (2, 3, 4)}


def test_link_single_edge():
    h = Hypergraph(3, 3, [(0, 1, 2)])
    assert link_subhypergraph(h, (2, 0, 1)).edges == {(0, 1, 2)}


def test_link_complete():
    h = complete_hypergraph(3, 4)
    assert link_subhypergraph(h, (0, 1, 2)).edges == h.edge_set()


def test_link_rejects_non_edge():
    with pytest.raises(ValueError):
        link_subhypergraph(CHAIN, (1, 2, 4))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(k=3, max_n=7, max_edges=10), st.data())
def test_link_diameter_at_most_three(h, data):
    if not h.edges:
        return
    e = data.draw(st.sampled_from(h.edges))
    sub = link_subhypergraph(h, e)
    assert oracle.tight_path_diameter(sub.edges, 3) <= 3


@settings(max_examples=30, deadline=None)
@given(hypergraphs(k=4, min_n=4, max_n=7, max_edges=10), st.data())
def test_link_diameter_at_most_three_k4(h, data):
    if not h.edges:
        return
    e = data.draw(st.sampled_from(h.edges))
    assert oracle.tight_path_diameter(link_subhypergraph(h, e).edges, 4) <= 3


# patterns and copy counting ---------------------------------------------------------


def test_pattern_sizes():
    assert (make_pattern_Hk(2).n, make_pattern_Hk(2).m) == (4, 4)
    assert (make_pattern_Hk(3).n, make_pattern_Hk(3).m) == (6, 5)
    assert make_pattern_K2k(2).m == 4
    assert make_pattern_K2k(3).m == 8


def test_h2_is_four_cycle():
    h2 = make_pattern_Hk(2)
    degrees = [sum(x in e for e in h2.edges) for x in range(4)]
    assert degrees == [2, 2, 2, 2]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_hk_sits_inside_k2k(k):
    hk = make_pattern_Hk(k)
    assert count_labeled_copies(make_pattern_K2k(k), hk) > 0


def test_count_c4_and_k4():
    h2 = make_pattern_Hk(2)
    c4 = Hypergraph(2, 4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert count_labeled_copies(c4, h2) == 8
    assert count_labeled_copies(complete_hypergraph(2, 4), h2) == 24
    assert count_labeled_copies(Hypergraph(2, 4, []), h2) == 0


def test_count_errors():
    with pytest.raises(ValueError, match="uniformity"):
        count_labeled_copies(complete_hypergraph(3, 5), make_pattern_Hk(2))
    big = Hypergraph(2, 11, [(0, 1)])
    with pytest.raises(SizeCapError):
        count_labeled_copies(complete_hypergraph(2, 12), big)


def test_count_with_isolated_pattern_vertices():
    pattern = Hypergraph(2, 3, [(0, 1)])
    host = Hypergraph(2, 4, [(0, 1)])
    # 2 orientations of the edge, then 2 choices for the isolated vertex
    assert count_labeled_copies(host, pattern) == 4


@settings(max_examples=30, deadline=None)
@given(hypergraphs(k=3, min_n=4, max_n=6, max_edges=10))
def test_count_matches_brute_force(host):
    pattern = make_pattern_Hk(3) if host.n >= 6 else Hypergraph(3, 4, [(0, 1, 2), (1, 2, 3)])
    assert count_labeled_copies(host, pattern) == brute_copies(host, pattern)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([3, 4]).flatmap(lambda k: st.tuples(st.just(k), hypergraphs(k=k, min_n=k, max_n=7, max_edges=12))),
       st.data())
def test_relaxed_and_distinct_agree_within_three(k_h, data):
    _, h = k_h
    v = data.draw(st.integers(0, h.n - 1))
    w = data.draw(st.integers(0, h.n - 1).filter(lambda x: x != v))
    relaxed = relaxed_distances(h, v).get(w, INF)
    assert (relaxed <= 3) == (brute_tight_distance(h, v, w) <= 3)
