from __future__ import annotations

import dataclasses
import random

import pytest
from hypothesis import given, settings

import c6cover.claims as claims
from c6cover.claims import (
    check_claim_4_1,
    check_claim_4_2,
    check_lemma_3_1,
    classify_edges,
    partition_around,
)
from c6cover.constructions import construction1, construction2
from c6cover.core import ThreeGraph, complete_three_graph, link_graph
from c6cover.errors import BadArguments, PreconditionViolated, RangeError
from c6cover.fileio import parse_graph
from c6cover.verify import uncovered_instance

from .strategies import three_graphs

# link of 0: the K2 1-2, edges 3-4 3-5 3-6 5-6, and vertex 7 isolated
SMALL = ThreeGraph(8, [(0, 1, 2), (0, 3, 4), (0, 3, 5), (0, 3, 6), (0, 5, 6), (1, 3, 4), (2, 3, 4)])


def test_partition_small_example():
    P = partition_around(SMALL, 0, 3)
    assert P.M0 == {(1, 2)}
    assert P.I0 == {7}
    assert P.Mv == {(5, 6)}
    assert P.Iv == {4}
    # G_3 - 0 has edges 1-4 and 2-4, so 4 has degree 2 there
    assert P.Xv == {4}
    assert P.Jv == {7}
    assert P.good


def test_partition_other_vertex():
    P = partition_around(SMALL, 0, 6)
    assert P.Mv == frozenset()
    assert P.Iv == frozenset()
    assert P.Xv == frozenset() and P.Jv == {7}


def test_partition_argument_errors():
    with pytest.raises(BadArguments):
        partition_around(SMALL, 2, 2)
    with pytest.raises(RangeError):
        partition_around(SMALL, 0, 8)
    with pytest.raises(RangeError):
        classify_edges(SMALL, -1)


def test_classify_construction2_n24():
    G, p = construction2(24)
    cls = classify_edges(G, p.apex)
    assert cls.E1 == frozenset() and cls.E2 == frozenset()
    assert cls.E3 == {(x, y) for x in p.A1 for y in p.A2}
    assert cls.bad_vertices == []
    P1 = partition_around(G, p.apex, p.A1[0])
    P2 = partition_around(G, p.apex, p.A2[0])
    assert P1.Xv == set(p.B1) and P2.Xv == set(p.B2)
    assert P1.I0 == set(p.B1) | set(p.B2)


def test_classify_marks_bad_vertices():
    # star centre 1 with leaves 2..7 in the link of 0: each leaf is isolated once 1 goes
    G = ThreeGraph(9, [(0, 1, x) for x in range(2, 8)] + [(0, 2, 8)])
    cls = classify_edges(G, 0)
    assert cls.isolated_after[1] == {3, 4, 5, 6, 7}
    assert cls.bad_vertices == [1]
    assert cls.E1 == {(1, x) for x in range(2, 8)}
    assert cls.E2 == {(2, 8)} - cls.E1


def _isolated_by_neighbourhood(G: ThreeGraph, u: int, v: int) -> set[int]:
    L = link_graph(G, u)
    out = set()
    for w in L.labels:
        nb = L.neighbors_of(w)
        if w != v and nb and set(nb) == {v}:
            out.add(w)
    return out


@settings(max_examples=150, deadline=None)
@given(three_graphs(min_n=3, max_n=9))
def test_iv_matches_neighbourhood_characterisation(G):
    for v in range(1, G.n):
        assert partition_around(G, 0, v).Iv == _isolated_by_neighbourhood(G, 0, v)


@settings(max_examples=150, deadline=None)
@given(three_graphs(min_n=3, max_n=9))
def test_partition_and_bad_vertex_bound(G):
    cls = classify_edges(G, 0)
    sets = list(cls.isolated_after.values())
    assert sum(len(s) for s in sets) == len(set().union(*sets))
    bad = len(cls.bad_vertices)
    assert bad * bad <= G.n
    L = link_graph(G, 0)
    assert cls.E1 | cls.E2 | cls.E3 == L.labeled_edges()
    assert not (cls.E1 & cls.E2 or cls.E1 & cls.E3 or cls.E2 & cls.E3)
    for v in range(1, G.n):
        P = partition_around(G, 0, v)
        assert P.Xv | P.Jv == P.I0 | P.Iv
        assert not P.Xv & P.Jv
        assert not P.I0 & P.Iv


def test_claims_hold_on_random_uncovered_instances():
    rng = random.Random(4)
    checked41 = checked42 = 0
    for _ in range(60):
        G = uncovered_instance(9, rng)
        for v in range(1, 9):
            if len(G.third_vertices(0, v)) >= 4:
                assert check_claim_4_1(G, 0, v).holds
                checked41 += 1
        for e in sorted(classify_edges(G, 0).E3):
            assert check_claim_4_2(G, 0, *e).holds
            checked42 += 1
    assert checked41 > 0 and checked42 > 0


def test_claim_preconditions():
    K = complete_three_graph(7)
    with pytest.raises(PreconditionViolated):
        check_claim_4_1(K, 0, 1)
    with pytest.raises(PreconditionViolated):
        check_claim_4_2(K, 0, 1, 2)
    G, p = construction2(24)
    with pytest.raises(PreconditionViolated):
        check_claim_4_1(G, p.apex, p.B1[0])
    with pytest.raises(PreconditionViolated):
        check_claim_4_2(G, p.apex, p.A1[0], p.A1[1])
    with pytest.raises(PreconditionViolated):
        check_lemma_3_1(construction1(7), 0)
    with pytest.raises(RangeError):
        check_lemma_3_1(K, 7)


def test_lemma_on_complete_graph():
    K = complete_three_graph(7)
    assert all(check_lemma_3_1(K, v).holds for v in range(7))


def test_claim41_detects_mutation(monkeypatch):
    G, p = construction2(24)
    real = claims.partition_around

    def no_isolated(*args):
        return dataclasses.replace(real(*args), I0=frozenset())

    monkeypatch.setattr(claims, "partition_around", no_isolated)
    verdict = check_claim_4_1(G, p.apex, p.A1[0])
    assert not verdict.holds
    assert verdict.violations[0] == (p.B1[0], p.B1[1])
    assert parse_graph(verdict.counterexample) == G


def test_claim42_detects_mutation(monkeypatch):
    G, p = construction2(24)
    real = claims.partition_around

    def everything_private(*args):
        P = real(*args)
        return dataclasses.replace(P, Xv=P.I0 | P.Iv)

    monkeypatch.setattr(claims, "partition_around", everything_private)
    verdict = check_claim_4_2(G, p.apex, p.A1[0], p.A2[0])
    assert not verdict.holds
    assert set(verdict.violations) == set(p.B1) | set(p.B2)


def test_lemma_detects_mutation(monkeypatch):
    K = complete_three_graph(7)
    monkeypatch.setattr(claims, "find_c6_through", lambda G, v: None)
    verdict = check_lemma_3_1(K, 0)
    assert not verdict.holds
    text = verdict.counterexample
    assert text.startswith("# lemma31 v=0\n")
    assert parse_graph(text) == K
