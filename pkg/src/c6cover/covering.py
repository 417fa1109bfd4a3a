"""Covering oracles for the linear triangle C6³ and for general small 3-graphs.

A copy of C6³ is three host edges ``v1v2v3, v3v4v5, v5v6v1`` on six distinct
vertices; extra host edges among them are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ThreeGraph, link_graph, min_codegree
from .errors import FTooLarge, PreconditionViolated, RangeError
from .patterns import find_p5, find_two_disjoint_p3

C6_EDGES = ((0, 1, 2), (2, 3, 4), (4, 5, 0))
C6 = ThreeGraph(6, C6_EDGES)


@dataclass(frozen=True)
class C6Witness:
    """Host vertices playing roles v1..v6 of C6³."""

    roles: tuple[int, int, int, int, int, int]

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        r = self.roles
        return tuple(tuple(sorted((r[a], r[b], r[c]))) for a, b, c in C6_EDGES)

    @property
    def spine(self) -> tuple[int, int, int]:
        return self.roles[0], self.roles[2], self.roles[4]

    def validate(self, G: ThreeGraph) -> bool:
        r = self.roles
        if len(r) != 6 or len(set(r)) != 6 or not all(0 <= x < G.n for x in r):
            return False
        return all(e in G.edges for e in self.edges)


@dataclass(frozen=True)
class CoverReport:
    covered: dict[int, C6Witness | None]
    uncovered: tuple[int, ...]

    @property
    def fully_covered(self) -> bool:
        return not self.uncovered


def _check_vertex(G: ThreeGraph, u: int) -> None:
    if not 0 <= u < G.n:
        raise RangeError(f"vertex {u} not in [0, {G.n})")


def _two_distinct(first: list[int], second: list[int]) -> tuple[int, int] | None:
    """Pick ``a`` from ``first`` and ``c`` from ``second`` with ``a != c``."""
    if not first or not second:
        return None
    a = first[0]
    for c in second:
        if c != a:
            return a, c
    if len(first) > 1:
        return first[1], second[0]
    return None


def _spine_through(G: ThreeGraph, u: int) -> C6Witness | None:
    # u = v1; look for the middle edge v3 v4 v5 between two link vertices.
    link = G.link_sets[u]
    lnb: dict[int, set[int]] = {}
    for a, b in link:
        lnb.setdefault(a, set()).add(b)
        lnb.setdefault(b, set()).add(a)
    for x in sorted(lnb):
        for y in sorted(G.shadow[x] & lnb.keys()):
            if y <= x:
                continue
            for w in sorted(G.third_vertices(x, y)):
                if w == u:
                    continue
                pick = _two_distinct(sorted(lnb[x] - {y, w}), sorted(lnb[y] - {x, w}))
                if pick is not None:
                    a, c = pick
                    return C6Witness((u, a, x, w, y, c))
    return None


def _leaf_through(G: ThreeGraph, u: int) -> C6Witness | None:
    # u = v2 inside v1 u v3; the other two edges avoid u.
    for p, q in sorted(G.link_sets[u]):
        for c in sorted((G.shadow[p] & G.shadow[q]) - {u}):
            pick = _two_distinct(
                sorted(G.third_vertices(q, c) - {u, p}),
                sorted(G.third_vertices(p, c) - {u, q}),
            )
            if pick is not None:
                v4, v6 = pick
                return C6Witness((p, u, q, v4, c, v6))
    return None


def find_c6_through(G: ThreeGraph, u: int) -> C6Witness | None:
    """Exact search for a copy of C6³ containing ``u``."""
    _check_vertex(G, u)
    if G.n < 6:
        return None
    return _spine_through(G, u) or _leaf_through(G, u)


def cover_report(G: ThreeGraph, fast: bool = False) -> CoverReport:
    """Per-vertex coverage.  With ``fast`` and δ₂ ≥ 2 the link-pattern path is tried first."""
    use_fast = fast and G.n >= 2 and min_codegree(G) >= 2
    covered: dict[int, C6Witness | None] = {}
    for v in range(G.n):
        w = fast_witness_via_link(G, v) if use_fast else None
        covered[v] = w or find_c6_through(G, v)
    return CoverReport(covered, tuple(v for v, w in covered.items() if w is None))


def _pick_third(G: ThreeGraph, a: int, b: int, avoid: int) -> int:
    # smallest x != avoid completing ab to an edge; codegree >= 2 guarantees one
    return min(G.third_vertices(a, b) - {avoid})


def fast_witness_via_link(G: ThreeGraph, v: int) -> C6Witness | None:
    """Build a C6³ through ``v`` from a 2P3 or P5 in its link (needs δ₂ ≥ 2).

    Returns ``None`` when the link contains neither pattern; that says
    nothing about coverage.
    """
    _check_vertex(G, v)
    if G.n < 2 or min_codegree(G) < 2:
        raise PreconditionViolated("fast link witness requires minimum codegree >= 2")
    H = link_graph(G, v)
    two = find_two_disjoint_p3(H)
    if two is not None:
        (w1, u1, w2), (w3, u2, w4) = two[0].vertices, two[1].vertices
        x = _pick_third(G, u1, u2, v)
        a = w2 if w2 != x else w1
        c = w3 if w3 != x else w4
        return C6Witness((v, a, u1, x, u2, c))
    p5 = find_p5(H)
    if p5 is not None:
        w1, u1, w, u2, w2 = p5.vertices
        x = _pick_third(G, u1, u2, v)
        if x == w1:
            return C6Witness((v, w, u1, w1, u2, w2))
        if x == w2:
            return C6Witness((v, w1, u1, w2, u2, w))
        return C6Witness((v, w1, u1, x, u2, w2))
    return None


def find_f_cover(G: ThreeGraph, u: int, F: ThreeGraph) -> dict[int, int] | None:
    """Injective map V(F) -> V(G) sending edges to edges, with ``u`` in its image."""
    _check_vertex(G, u)
    if F.n > 8:
        raise FTooLarge(f"pattern has {F.n} vertices; at most 8 supported")
    if F.n > G.n or F.n == 0:
        return None
    f_edges = sorted(F.edges)

    for root in range(F.n):
        # grow the order by adjacency so edge checks fire early
        order = [root]
        while len(order) < F.n:
            placed = set(order)
            nxt = None
            for e in f_edges:
                if len(placed & set(e)) >= 1:
                    rest = [z for z in e if z not in placed]
                    if rest:
                        nxt = rest[0]
                        break
            if nxt is None:
                nxt = min(set(range(F.n)) - placed)
            order.append(nxt)
        # edges completed when order[i] gets placed
        closing: list[list[tuple[int, int, int]]] = [[] for _ in range(F.n)]
        rank = {z: i for i, z in enumerate(order)}
        for e in f_edges:
            closing[max(rank[z] for z in e)].append(e)

        phi: dict[int, int] = {root: u}
        used = {u}

        def extend(i: int) -> bool:
            if i == F.n:
                return True
            z = order[i]
            cands: set[int] | range
            cands = range(G.n)
            for e in closing[i]:
                p, q = (phi[y] for y in e if y != z)
                cands = G.third_vertices(p, q)
                break
            for g in sorted(cands):
                if g in used:
                    continue
                phi[z] = g
                if all(G.has_edge(*(phi[y] for y in e)) for e in closing[i]):
                    used.add(g)
                    if extend(i + 1):
                        return True
                    used.discard(g)
                del phi[z]
            return False

        if all(G.has_edge(*(phi[y] for y in e)) for e in closing[0]) and extend(1):
            return dict(sorted(phi.items()))
    return None
