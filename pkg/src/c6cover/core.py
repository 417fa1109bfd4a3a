"""3-graphs, 2-graphs, degrees and link graphs.

Vertices are dense integers ``0 .. n-1``.  A :class:`ThreeGraph` stores its
edges as sorted triples ``(a, b, c)`` with ``a < b < c``; a codegree index
(pair -> third vertices) is built on first use and cached.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import chain, combinations

import numpy as np

from .errors import (
    DuplicateEdge,
    MalformedEdge,
    RangeError,
    TooFewVertices,
    UnsupportedDegreeOrder,
)

Triple = tuple[int, int, int]
Pair = tuple[int, int]


@dataclass(frozen=True, eq=True)
class ThreeGraph:
    n: int
    edges: frozenset[Triple]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise RangeError(f"vertex count must be non-negative, got {n}")
        seen: set[Triple] = set()
        for raw in edges:
            if len(raw) != 3:
                raise MalformedEdge(f"edge {tuple(raw)!r} does not have three vertices")
            for x in raw:
                if not 0 <= x < n:
                    raise RangeError(f"vertex {x} of edge {tuple(raw)!r} not in [0, {n})")
            a, b, c = sorted(raw)
            if a == b or b == c:
                raise MalformedEdge(f"edge {tuple(raw)!r} repeats a vertex")
            t = (a, b, c)
            if t in seen:
                raise DuplicateEdge(f"edge {t!r} given twice")
            seen.add(t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(seen))

    @classmethod
    def _trusted(cls, n: int, edges: frozenset[Triple]) -> ThreeGraph:
        # Generators that already produce sorted, unique, in-range triples.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", edges)
        return g

    def __repr__(self) -> str:
        return f"ThreeGraph(n={self.n}, m={len(self.edges)})"

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def pair_index(self) -> dict[Pair, frozenset[int]]:
        """Map each pair ``(a, b)``, ``a < b``, with positive codegree to its third vertices."""
        idx: dict[Pair, set[int]] = {}
        for a, b, c in self.edges:
            idx.setdefault((a, b), set()).add(c)
            idx.setdefault((a, c), set()).add(b)
            idx.setdefault((b, c), set()).add(a)
        return {p: frozenset(s) for p, s in idx.items()}

    @cached_property
    def link_sets(self) -> tuple[frozenset[Pair], ...]:
        """Per-vertex set of link pairs (sorted)."""
        links: list[set[Pair]] = [set() for _ in range(self.n)]
        for a, b, c in self.edges:
            links[a].add((b, c))
            links[b].add((a, c))
            links[c].add((a, b))
        return tuple(frozenset(s) for s in links)

    @cached_property
    def shadow(self) -> tuple[frozenset[int], ...]:
        """Per-vertex set of vertices sharing at least one edge with it."""
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.pair_index:
            nb[a].add(b)
            nb[b].add(a)
        return tuple(frozenset(s) for s in nb)

    def third_vertices(self, a: int, b: int) -> frozenset[int]:
        if a > b:
            a, b = b, a
        return self.pair_index.get((a, b), frozenset())

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self.edges

    def sorted_edges(self) -> list[Triple]:
        """Edges in colexicographic order."""
        return sorted(self.edges, key=lambda e: (e[2], e[1], e[0]))

    def with_edges(self, extra: Iterable[Sequence[int]]) -> ThreeGraph:
        return ThreeGraph(self.n, list(self.edges) + [tuple(e) for e in extra])


@dataclass(frozen=True)
class SimpleGraph:
    """A 2-graph whose nodes remember a host-vertex label.

    ``edges`` holds pairs of *positions* ``(i, j)`` with ``i < j``.
    """

    labels: tuple[int, ...]
    edges: frozenset[Pair]

    def __init__(self, labels: Iterable[int], edges: Iterable[Sequence[int]] = ()):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be pairwise distinct")
        k = len(labels)
        es: set[Pair] = set()
        for raw in edges:
            i, j = raw
            if not (0 <= i < k and 0 <= j < k):
                raise RangeError(f"edge {tuple(raw)!r} has a position outside [0, {k})")
            if i == j:
                raise MalformedEdge(f"self-loop at position {i}")
            p = (i, j) if i < j else (j, i)
            if p in es:
                raise DuplicateEdge(f"edge {p!r} given twice")
            es.add(p)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def from_labeled_edges(cls, labels: Iterable[int], edges: Iterable[Sequence[int]]) -> SimpleGraph:
        labels = tuple(labels)
        pos = {x: i for i, x in enumerate(labels)}
        try:
            return cls(labels, [(pos[a], pos[b]) for a, b in edges])
        except KeyError as exc:
            raise RangeError(f"unknown vertex label {exc.args[0]}") from None

    def __repr__(self) -> str:
        return f"SimpleGraph(order={len(self.labels)}, m={len(self.edges)})"

    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def position(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.labels)}

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmask per position."""
        adj = [0] * len(self.labels)
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    def labeled_edges(self) -> set[Pair]:
        out = set()
        for i, j in self.edges:
            a, b = self.labels[i], self.labels[j]
            out.add((a, b) if a < b else (b, a))
        return out

    def degree_of(self, label: int) -> int:
        return self.adjacency[self.position[label]].bit_count()

    def neighbors_of(self, label: int) -> list[int]:
        row = self.adjacency[self.position[label]]
        return sorted(self.labels[j] for j in range(len(self.labels)) if row >> j & 1)


@dataclass(frozen=True)
class DegreeProfile:
    min1: int
    min2: int
    vertex_degrees: dict[int, int] = field(repr=False)
    pair_codegrees: dict[Pair, int] = field(repr=False)


def new_three_graph(n: int, edges: Iterable[Sequence[int]]) -> ThreeGraph:
    """Validate ``edges`` and build a 3-graph on ``n`` vertices.

    Raises :class:`RangeError`, :class:`MalformedEdge` or :class:`DuplicateEdge`.
    """
    return ThreeGraph(n, edges)


def complete_three_graph(n: int) -> ThreeGraph:
    return ThreeGraph._trusted(n, frozenset(combinations(range(n), 3)))


def degree(G: ThreeGraph, S: Iterable[int]) -> int:
    """Number of edges of ``G`` containing the vertex set ``S`` (``|S|`` in {1, 2})."""
    S = sorted(set(S))
    for x in S:
        if not 0 <= x < G.n:
            raise RangeError(f"vertex {x} not in [0, {G.n})")
    if len(S) == 1:
        return len(G.link_sets[S[0]])
    if len(S) == 2:
        return len(G.third_vertices(S[0], S[1]))
    raise UnsupportedDegreeOrder(f"degree is defined here for |S| in {{1, 2}}, got {len(S)}")


def degree_profile(G: ThreeGraph) -> DegreeProfile:
    if G.n < 2:
        raise TooFewVertices("codegrees need at least two vertices")
    n = G.n
    arr = _edge_array(G)
    vcounts = np.bincount(arr.ravel(), minlength=n)
    pair_ids = np.concatenate([arr[:, 0] * n + arr[:, 1], arr[:, 0] * n + arr[:, 2], arr[:, 1] * n + arr[:, 2]])
    pcounts = np.bincount(pair_ids, minlength=n * n)
    rows, cols = np.triu_indices(n, 1)  # same order as combinations(range(n), 2)
    vdeg = dict(enumerate(vcounts.tolist()))
    codeg = dict(zip(zip(rows.tolist(), cols.tolist()), pcounts[rows * n + cols].tolist()))
    return DegreeProfile(min(vdeg.values()), min(codeg.values()), vdeg, codeg)


def _edge_array(G: ThreeGraph) -> np.ndarray:
    flat = chain.from_iterable(G.edges)
    return np.fromiter(flat, dtype=np.int64, count=3 * len(G.edges)).reshape(-1, 3)


def min_codegree(G: ThreeGraph) -> int:
    """δ₂(G) without materialising the full profile."""
    if G.n < 2:
        raise TooFewVertices("codegrees need at least two vertices")
    idx = G.pair_index
    if len(idx) < G.n * (G.n - 1) // 2:
        return 0
    return min(len(s) for s in idx.values())


def min_degree(G: ThreeGraph) -> int:
    if G.n < 1:
        raise TooFewVertices("minimum degree needs a vertex")
    return int(np.bincount(_edge_array(G).ravel(), minlength=G.n).min())


def link_graph(G: ThreeGraph, v: int) -> SimpleGraph:
    """The link of ``v``: a 2-graph on ``V - {v}`` with edge ab iff vab is an edge."""
    if not 0 <= v < G.n:
        raise RangeError(f"vertex {v} not in [0, {G.n})")
    labels = [x for x in range(G.n) if x != v]
    # positions: x -> x for x < v, x -> x - 1 for x > v
    edges = [(a - (a > v), b - (b > v)) for a, b in G.link_sets[v]]
    return SimpleGraph(labels, edges)


def delete_vertices(H: SimpleGraph, W: Iterable[int]) -> SimpleGraph:
    """Induced subgraph of ``H`` on the labels not in ``W``."""
    W = set(W)
    unknown = W - set(H.labels)
    if unknown:
        raise RangeError(f"unknown vertices {sorted(unknown)}")
    if not W:
        return H
    keep = [i for i, x in enumerate(H.labels) if x not in W]
    newpos = {old: new for new, old in enumerate(keep)}
    edges = [(newpos[i], newpos[j]) for i, j in H.edges if i in newpos and j in newpos]
    return SimpleGraph([H.labels[i] for i in keep], edges)
