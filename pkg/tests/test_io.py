import pytest
from hypothesis import given

from conftest import graphs, hypergraphs
from lowdiam.io import (
    FormatError,
    edge_digest,
    format_graph,
    format_hypergraph,
    parse_graph,
    parse_hypergraph,
    read_graph,
    write_graph,
)


def test_parse_graph_with_comments():
    g = parse_graph("# a path\n4 3\n\n0 1\n1 2\n# middle\n2 3\n")
    assert g.n == 4 and g.edges == ((0, 1), (1, 2), (2, 3))


def test_parse_graph_keeps_input_order():
    g = parse_graph("3 2\n2 1\n0 2\n")
    assert g.edges == ((1, 2), (0, 2))


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("", 1, "missing header"),
        ("3\n", 1, "header"),
        ("3 1\n0 3\n", 2, "out of range"),
        ("3 1\n1 1\n", 2, "self-loop"),
        ("3 2\n0 1\n1 0\n", 3, "duplicate"),
        ("3 1\n0 x\n", 2, "integers"),
        ("3 1\n0 1 2\n", 2, "exactly two"),
        ("3 2\n0 1\n", 2, "declares 2"),
    ],
)
def test_parse_graph_errors(text, lineno, fragment):
    with pytest.raises(FormatError, match=fragment) as info:
        parse_graph(text)
    assert info.value.lineno == lineno


def test_parse_hypergraph():
    h = parse_hypergraph("3 6 3\n1 2 3\n4 3 2\n3 4 5\n")
    assert h.k == 3 and h.edges == ((1, 2, 3), (2, 3, 4), (3, 4, 5))


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("3 6 1\n1 2\n", "exactly 3"),
        ("3 6 1\n1 1 2\n", "repeated"),
        ("3 6 2\n1 2 3\n3 2 1\n", "duplicate"),
        ("1 6 0\n", "uniformity"),
        ("3 4 1\n1 2 4\n", "out of range"),
    ],
)
def test_parse_hypergraph_errors(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        parse_hypergraph(text)


@given(graphs())
def test_graph_round_trip(g):
    assert parse_graph(format_graph(g)).edges == g.edges


@given(hypergraphs())
def test_hypergraph_round_trip(h):
    back = parse_hypergraph(format_hypergraph(h))
    assert back == h and back.edges == h.edges


def test_file_round_trip(tmp_path):
    g = parse_graph("5 2\n0 4\n1 2\n")
    write_graph(g, tmp_path / "g.txt")
    assert read_graph(tmp_path / "g.txt").edges == g.edges


def test_digest_depends_on_order():
    assert edge_digest([(0, 1), (1, 2)]) != edge_digest([(1, 2), (0, 1)])
    assert edge_digest([(0, 1)]) == edge_digest([(0, 1)])
