from __future__ import annotations

import pytest
from hypothesis import given

from c6cover.constructions import construction1, turan_graph
from c6cover.core import SimpleGraph, ThreeGraph
from c6cover.errors import ParseError
from c6cover.fileio import parse_graph, parse_hypergraph, read_graph, serialize, write_graph

from .strategies import three_graphs


def test_serialize_c6_colex():
    G = ThreeGraph(6, [(4, 5, 0), (0, 1, 2), (2, 3, 4)])
    assert serialize(G) == "6 3\n0 1 2\n2 3 4\n0 4 5\n"


def test_serialize_two_graph():
    assert serialize(turan_graph(4, 2)) == "4 4\n0 2\n1 2\n0 3\n1 3\n"


@given(three_graphs(max_n=9))
def test_roundtrip(G):
    text = serialize(G)
    assert parse_graph(text) == G
    assert serialize(parse_graph(text)) == text


def test_roundtrip_simple_graph():
    T = turan_graph(7, 3)
    back = parse_graph(serialize(T))
    assert isinstance(back, SimpleGraph)
    assert back.labeled_edges() == T.labeled_edges()


def test_comments_and_empty():
    text = "# made by hand\n4 1\n# middle\n0 1 3\n"
    assert parse_graph(text) == ThreeGraph(4, [(0, 1, 3)])
    assert parse_graph("5 0\n") == ThreeGraph(5, [])
    assert parse_hypergraph("3 1\n0 1 2\n") == ThreeGraph(3, [(0, 1, 2)])


@pytest.mark.parametrize(
    "text, code, line",
    [
        ("3 1\n0 1 2", "E_NEWLINE", 2),
        ("# only\n", "E_HEADER", 1),
        ("3\n", "E_HEADER", 1),
        ("3 1\n0 1 x\n", "E_TOKEN", 2),
        ("3 1\n0  1 2\n", "E_TOKEN", 2),
        ("3 -1\n", "E_TOKEN", 1),
        ("4 2\n0 1 2\n", "E_COUNT", 1),
        ("4 1\n0 1 2 3\n", "E_ARITY", 2),
        ("4 2\n0 1 2\n0 1\n", "E_ARITY", 3),
        ("3 1\n0 1 3\n", "E_RANGE", 2),
        ("3 1\n1 1 2\n", "E_ORDER", 2),
        ("4 2\n0 1 2\n0 1 2\n", "E_DUPLICATE", 3),
    ],
)
def test_diagnostics(text, code, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.code == code
    assert info.value.line == line


def test_diagnostic_column():
    with pytest.raises(ParseError) as info:
        parse_graph("5 1\n0 3 2\n")
    assert (info.value.code, info.value.column) == ("E_ORDER", 5)


def test_arity_forced():
    with pytest.raises(ParseError) as info:
        parse_hypergraph("3 1\n0 1\n")
    assert info.value.code == "E_ARITY"


def test_file_helpers(tmp_path):
    path = tmp_path / "c1.txt"
    write_graph(str(path), construction1(6))
    assert path.read_bytes().endswith(b"\n")
    assert read_graph(str(path)) == construction1(6)
