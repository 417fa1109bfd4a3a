"""Generators for the two extremal constructions and for Turán graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import SimpleGraph, ThreeGraph
from .errors import TooFewVertices
from .exact import ceil_n_over_sqrt2, threshold_exceeded  # noqa: F401  (re-exported)
from .patterns import turan_part_sizes


def construction1(n: int) -> ThreeGraph:
    """The star 3-graph: vertex 0 together with every pair of the other vertices."""
    if n < 3:
        raise TooFewVertices(f"construction 1 needs n >= 3, got {n}")
    return ThreeGraph._trusted(n, frozenset((0, i, j) for i, j in combinations(range(1, n), 2)))


@dataclass(frozen=True)
class Construction2Params:
    n: int
    b: int
    a_floor: int
    a_ceil: int
    apex: int = 0

    @property
    def A1(self) -> range:
        return range(1, 1 + self.a_floor)

    @property
    def A2(self) -> range:
        return range(self.A1.stop, self.A1.stop + self.a_ceil)

    @property
    def B1(self) -> range:
        return range(self.A2.stop, self.A2.stop + self.b)

    @property
    def B2(self) -> range:
        return range(self.B1.stop, self.B1.stop + self.b)

    @property
    def parts(self) -> dict[int, str]:
        out = {self.apex: "apex"}
        for name in ("A1", "A2", "B1", "B2"):
            out.update({v: name for v in getattr(self, name)})
        return out

    @classmethod
    def for_n(cls, n: int) -> Construction2Params:
        if n < 7:
            raise TooFewVertices(f"construction 2 needs n >= 7, got {n}")
        b = n - ceil_n_over_sqrt2(n)
        rest = n - 1 - 2 * b
        return cls(n=n, b=b, a_floor=rest // 2, a_ceil=rest - rest // 2)


def construction2(n: int) -> tuple[ThreeGraph, Construction2Params]:
    """Apex ``u = 0`` joined to A1×A2, A_i joined to pairs of B_i, and all triples of B1∪B2."""
    p = Construction2Params.for_n(n)
    edges: list[tuple[int, int, int]] = [(p.apex, x, y) for x in p.A1 for y in p.A2]
    for A, B in ((p.A1, p.B1), (p.A2, p.B2)):
        edges.extend((x, y, z) for x in A for y, z in combinations(B, 2))
    edges.extend(combinations(range(p.B1.start, p.B2.stop), 3))
    return ThreeGraph._trusted(n, frozenset(edges)), p


@dataclass(frozen=True)
class Construction2Degrees:
    apex: int
    a1: int
    a2: int
    b1: int
    b2: int

    def for_part(self, part: str) -> int:
        return {"apex": self.apex, "A1": self.a1, "A2": self.a2, "B1": self.b1, "B2": self.b2}[part]


def construction2_degree_formulas(p: Construction2Params) -> Construction2Degrees:
    b = p.b
    inside_b = comb(2 * b - 1, 2)
    return Construction2Degrees(
        apex=p.a_floor * p.a_ceil,
        a1=p.a_ceil + comb(b, 2),
        a2=p.a_floor + comb(b, 2),
        b1=p.a_floor * (b - 1) + inside_b,
        b2=p.a_ceil * (b - 1) + inside_b,
    )


def turan_graph(n: int, r: int) -> SimpleGraph:
    """Complete r-partite graph with near-equal parts, larger parts first."""
    sizes = turan_part_sizes(n, r)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    return SimpleGraph(range(n), [(i, j) for i, j in combinations(range(n), 2) if part[i] != part[j]])
