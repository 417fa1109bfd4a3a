from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from c6cover.constructions import construction1
from c6cover.core import (
    SimpleGraph,
    ThreeGraph,
    complete_three_graph,
    degree,
    degree_profile,
    delete_vertices,
    link_graph,
    new_three_graph,
)
from c6cover.errors import DuplicateEdge, MalformedEdge, RangeError, TooFewVertices, UnsupportedDegreeOrder

from .strategies import three_graphs

C6_EDGES = {(0, 1, 2), (2, 3, 4), (4, 5, 0)}


def c6() -> ThreeGraph:
    return new_three_graph(6, C6_EDGES)


def test_new_three_graph_c6():
    G = c6()
    assert G.n == 6
    assert G.edges == {(0, 1, 2), (2, 3, 4), (0, 4, 5)}


def test_new_three_graph_empty():
    G = new_three_graph(5, set())
    assert G.n == 5 and len(G) == 0


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (4, [(0, 1, 1)], MalformedEdge),
        (4, [(0, 1, 4)], RangeError),
        (4, [(-1, 1, 2)], RangeError),
        (4, [(0, 1, 2), (2, 1, 0)], DuplicateEdge),
        (4, [(0, 1)], MalformedEdge),
    ],
)
def test_new_three_graph_rejects(n, edges, exc):
    with pytest.raises(exc):
        new_three_graph(n, edges)


def test_order_independent_construction():
    a = new_three_graph(6, [(0, 1, 2), (2, 3, 4), (4, 5, 0)])
    b = new_three_graph(6, [(5, 0, 4), (4, 2, 3), (1, 0, 2)])
    assert a == b and hash(a) == hash(b)


def test_degree_examples():
    G = c6()
    assert degree(G, {2}) == 2
    assert degree(G, {1}) == 1
    assert degree(complete_three_graph(6), {0, 1}) == 4


def test_degree_errors():
    G = c6()
    with pytest.raises(UnsupportedDegreeOrder):
        degree(G, {0, 1, 2})
    with pytest.raises(UnsupportedDegreeOrder):
        degree(G, set())
    with pytest.raises(RangeError):
        degree(G, {6})


def test_degree_profile_c6_counts_all_pairs():
    # direct count: the 15 pairs of the pattern include 9 with codegree 0
    prof = degree_profile(c6())
    assert prof.min1 == 1 and prof.min2 == 0
    assert len(prof.pair_codegrees) == 15
    assert sum(1 for c in prof.pair_codegrees.values() if c == 0) == 6
    assert sorted(prof.vertex_degrees.values()) == [1, 1, 1, 2, 2, 2]


def test_degree_profile_complete_and_construction1():
    prof = degree_profile(complete_three_graph(6))
    assert (prof.min1, prof.min2) == (10, 4)
    assert degree_profile(construction1(6)).min2 == 1


def test_degree_profile_needs_two_vertices():
    with pytest.raises(TooFewVertices):
        degree_profile(ThreeGraph(1, []))


def test_link_graph_examples():
    H = link_graph(c6(), 0)
    assert H.labels == (1, 2, 3, 4, 5)
    assert H.labeled_edges() == {(1, 2), (4, 5)}
    x_link = link_graph(construction1(6), 0)
    assert x_link.labeled_edges() == set(combinations(range(1, 6), 2))
    empty = link_graph(ThreeGraph(5, []), 3)
    assert empty.order == 4 and not empty.edges
    with pytest.raises(RangeError):
        link_graph(c6(), 6)


def test_delete_vertices_examples():
    a, b, c = 7, 8, 9
    path = SimpleGraph.from_labeled_edges([a, b, c], [(a, b), (b, c)])
    assert delete_vertices(path, {b}).labeled_edges() == set()
    assert delete_vertices(path, {b}).labels == (a, c)
    assert delete_vertices(path, set()) == path
    tri = SimpleGraph([10, 11, 12], [(0, 1), (1, 2), (0, 2)])
    assert delete_vertices(tri, {10}).labeled_edges() == {(11, 12)}
    with pytest.raises(RangeError):
        delete_vertices(tri, {5})


def test_simple_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph([1, 1], [])
    with pytest.raises(MalformedEdge):
        SimpleGraph([1, 2], [(0, 0)])
    with pytest.raises(DuplicateEdge):
        SimpleGraph([1, 2], [(0, 1), (1, 0)])


@settings(max_examples=150, deadline=None)
@given(three_graphs(min_n=2, max_n=9))
def test_handshake_identities(G):
    prof = degree_profile(G)
    assert sum(prof.vertex_degrees.values()) == 3 * len(G)
    assert sum(prof.pair_codegrees.values()) == 3 * len(G)
    assert prof.min1 == min(prof.vertex_degrees.values())
    assert prof.min2 == min(prof.pair_codegrees.values())


@settings(max_examples=150, deadline=None)
@given(three_graphs(min_n=1, max_n=9), st.data())
def test_link_consistency(G, data):
    v = data.draw(st.integers(0, G.n - 1))
    H = link_graph(G, v)
    assert len(H.edges) == degree(G, {v})
    for a, b in H.labeled_edges():
        assert degree(G, {a, b}) >= 1
    for a in H.labels:
        assert degree(G, {v, a}) == H.degree_of(a)


@settings(max_examples=100, deadline=None)
@given(three_graphs(max_n=8), st.randoms(use_true_random=False))
def test_reordering_is_structurally_equal(G, rnd):
    edges = [tuple(rnd.sample(e, 3)) for e in G.edges]
    rnd.shuffle(edges)
    assert new_three_graph(G.n, edges) == G
