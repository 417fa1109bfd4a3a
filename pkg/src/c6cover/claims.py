"""Checkable predicates for the structure around an uncovered vertex.

Given a vertex ``u`` lying in no C6³ and another vertex ``v``, the link
``G_u`` is split into K2-components ``M0``, isolated vertices ``I0``, and the
components ``M(v)``/``I(v)`` that appear once ``v`` (and the earlier
components' vertices) are deleted.  Vertices with ``|I(v)|² >= n`` are bad.
Each ``check_*`` function returns a :class:`Verdict`; a failed verdict carries
the instance as replayable graph-file text.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import SimpleGraph, ThreeGraph, delete_vertices, link_graph, min_codegree
from .covering import find_c6_through
from .errors import BadArguments, PreconditionViolated, RangeError
from .exact import eq1_lower_bound  # noqa: F401  (re-exported)
from .fileio import serialize
from .patterns import components, find_p5, find_two_disjoint_p3

Pair = tuple[int, int]


@dataclass(frozen=True)
class VertexPartition:
    u: int
    v: int
    M0: frozenset[Pair]
    I0: frozenset[int]
    Mv: frozenset[Pair]
    Iv: frozenset[int]
    Xv: frozenset[int]
    Jv: frozenset[int]
    good: bool


@dataclass(frozen=True)
class EdgeClassification:
    u: int
    good: dict[int, bool]
    E1: frozenset[Pair]
    E2: frozenset[Pair]
    E3: frozenset[Pair]
    link_degree: dict[int, int] = field(repr=False)
    isolated_after: dict[int, frozenset[int]] = field(repr=False)

    @property
    def bad_vertices(self) -> list[int]:
        return sorted(v for v, ok in self.good.items() if not ok)


@dataclass
class Verdict:
    holds: bool
    violations: list = field(default_factory=list)
    counterexample: str | None = None


def counterexample_text(G: ThreeGraph, note: str) -> str:
    """Graph-file text with a leading comment; parses back to ``G``."""
    return f"# {note}\n" + serialize(G)


def _k2_pairs(H: SimpleGraph) -> frozenset[Pair]:
    return frozenset(c.vertices for c in components(H).of_kind("K2"))


def _k1_vertices(H: SimpleGraph) -> frozenset[int]:
    return frozenset(c.vertices[0] for c in components(H).of_kind("K1"))


def _is_good(size: int, n: int) -> bool:
    # |I(v)| < √n, decided on integers
    return size * size < n


def _check_pair(G: ThreeGraph, u: int, v: int) -> None:
    for x in (u, v):
        if not 0 <= x < G.n:
            raise RangeError(f"vertex {x} not in [0, {G.n})")
    if u == v:
        raise BadArguments("u and v must be distinct")


def partition_around(G: ThreeGraph, u: int, v: int) -> VertexPartition:
    _check_pair(G, u, v)
    L = link_graph(G, u)
    M0 = _k2_pairs(L)
    I0 = _k1_vertices(L)
    covered_by_m0 = {x for p in M0 for x in p}
    Mv = _k2_pairs(delete_vertices(L, {v} | covered_by_m0))
    Iv = _k1_vertices(delete_vertices(L, {v} | I0))
    H = delete_vertices(link_graph(G, v), {u})
    pool = I0 | Iv
    Xv = frozenset(w for w in pool if w != v and H.degree_of(w) >= 2)
    return VertexPartition(u, v, M0, I0, Mv, Iv, Xv, pool - Xv, _is_good(len(Iv), G.n))


def classify_edges(G: ThreeGraph, u: int) -> EdgeClassification:
    """Split the link of ``u`` into bad edges, low-degree good edges and the rest."""
    if not 0 <= u < G.n:
        raise RangeError(f"vertex {u} not in [0, {G.n})")
    L = link_graph(G, u)
    I0 = _k1_vertices(L)
    ldeg = {x: L.degree_of(x) for x in L.labels}
    iso = {v: _k1_vertices(delete_vertices(L, {v} | I0)) for v in L.labels}
    good = {v: _is_good(len(iso[v]), G.n) for v in L.labels}
    E1, E2, E3 = set(), set(), set()
    for e in L.labeled_edges():
        a, b = e
        if not (good[a] and good[b]):
            E1.add(e)
        elif ldeg[a] <= 3 or ldeg[b] <= 3:
            E2.add(e)
        else:
            E3.add(e)
    return EdgeClassification(u, good, frozenset(E1), frozenset(E2), frozenset(E3), ldeg, iso)


def _require_uncovered(G: ThreeGraph, u: int) -> None:
    if find_c6_through(G, u) is not None:
        raise PreconditionViolated(f"vertex {u} is covered by a C6³")


def check_claim_4_1(G: ThreeGraph, u: int, v: int) -> Verdict:
    """Every edge of ``G_v - u`` is a pair of M0 ∪ M(v) or lies inside I0 ∪ I(v)."""
    _check_pair(G, u, v)
    _require_uncovered(G, u)
    if len(G.third_vertices(u, v)) < 4:
        raise PreconditionViolated(f"vertex {v} has degree < 4 in the link of {u}")
    P = partition_around(G, u, v)
    pairs = P.M0 | P.Mv
    pool = P.I0 | P.Iv
    H = delete_vertices(link_graph(G, v), {u})
    bad = sorted(e for e in H.labeled_edges() if e not in pairs and not (e[0] in pool and e[1] in pool))
    if bad:
        return Verdict(False, bad, counterexample_text(G, f"claim41 u={u} v={v}"))
    return Verdict(True)


def check_claim_4_2(G: ThreeGraph, u: int, v1: int, v2: int) -> Verdict:
    """Private vertex sets of the ends of an E3 edge are disjoint."""
    _check_pair(G, u, v1)
    _check_pair(G, u, v2)
    _require_uncovered(G, u)
    e = (min(v1, v2), max(v1, v2))
    if e not in classify_edges(G, u).E3:
        raise PreconditionViolated(f"{e} is not an E3 edge of the link of {u}")
    common = partition_around(G, u, v1).Xv & partition_around(G, u, v2).Xv
    if common:
        return Verdict(False, sorted(common), counterexample_text(G, f"claim42 u={u} v1={v1} v2={v2}"))
    return Verdict(True)


def check_lemma_3_1(G: ThreeGraph, v: int) -> Verdict:
    """With δ₂ ≥ 2: ``v`` is covered, or its link has neither a P5 nor a 2P3."""
    if not 0 <= v < G.n:
        raise RangeError(f"vertex {v} not in [0, {G.n})")
    if G.n < 2 or min_codegree(G) < 2:
        raise PreconditionViolated("lemma requires minimum codegree >= 2")
    if find_c6_through(G, v) is not None:
        return Verdict(True)
    H = link_graph(G, v)
    found = [w for w in (find_p5(H), find_two_disjoint_p3(H)) if w is not None]
    if found:
        return Verdict(False, found, counterexample_text(G, f"lemma31 v={v}"))
    return Verdict(True)
