"""Fixed-pattern detection in 2-graphs: P5, 2P3, components, triangles, Turán numbers.

The finders work on neighbourhood bitmasks and scan vertices in ascending
label order, so witnesses are deterministic.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb

from .core import SimpleGraph
from .errors import RangeError, TooFewVertices, TooLarge


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def validate(self, H: SimpleGraph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(x not in H.position for x in vs):
            return False
        edges = H.labeled_edges()
        return all(tuple(sorted(p)) in edges for p in zip(vs, vs[1:]))


def _label_order(H: SimpleGraph) -> list[int]:
    return sorted(range(H.order), key=H.labels.__getitem__)


def _extend(adj: Sequence[int], order: Sequence[int], path: list[int], used: int, length: int) -> list[int] | None:
    if len(path) == length:
        return path
    row = adj[path[-1]] & ~used
    if not row:
        return None
    for j in order:
        if row >> j & 1:
            path.append(j)
            found = _extend(adj, order, path, used | (1 << j), length)
            if found is not None:
                return found
            path.pop()
    return None


def find_path_positions(adj: Sequence[int], order: Sequence[int], length: int, allowed: int = -1) -> list[int] | None:
    """Positions of a path on ``length`` vertices inside ``allowed``, or ``None``."""
    masked = [a & allowed for a in adj]
    for s in order:
        if allowed >> s & 1:
            found = _extend(masked, order, [s], (1 << s) | ~allowed, length)
            if found is not None:
                return found
    return None


def find_p3_positions(adj: Sequence[int], order: Sequence[int], allowed: int = -1) -> tuple[int, int, int] | None:
    for c in order:
        if not allowed >> c & 1:
            continue
        row = adj[c] & allowed
        if row & (row - 1):
            ends = [j for j in order if row >> j & 1][:2]
            return ends[0], c, ends[1]
    return None


def find_two_disjoint_p3_positions(adj: Sequence[int], order: Sequence[int]):
    for c in order:
        nbrs = [j for j in order if adj[c] >> j & 1]
        for a, b in combinations(nbrs, 2):
            rest = ~((1 << a) | (1 << b) | (1 << c))
            second = find_p3_positions(adj, order, rest)
            if second is not None:
                return (a, c, b), second
    return None


def find_p5(H: SimpleGraph) -> PathWitness | None:
    """A path on five vertices in ``H`` (labels), or ``None``."""
    pos = find_path_positions(H.adjacency, _label_order(H), 5)
    if pos is None:
        return None
    return PathWitness(tuple(H.labels[i] for i in pos))


def find_two_disjoint_p3(H: SimpleGraph) -> tuple[PathWitness, PathWitness] | None:
    """Two vertex-disjoint paths on three vertices, or ``None``."""
    found = find_two_disjoint_p3_positions(H.adjacency, _label_order(H))
    if found is None:
        return None
    p, q = found
    return (PathWitness(tuple(H.labels[i] for i in p)), PathWitness(tuple(H.labels[i] for i in q)))


def _longest_path_vertices(adj: Sequence[int], start_set: Sequence[int]) -> int:
    best = 0

    def dfs(v: int, used: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        row = adj[v] & ~used
        while row:
            low = row & -row
            j = low.bit_length() - 1
            dfs(j, used | low, length + 1)
            row ^= low

    for s in start_set:
        dfs(s, 1 << s, 1)
    return best


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    kind: str
    edge_count: int
    has_cycle: bool
    _adj: tuple[int, ...] = field(repr=False, compare=False)
    _positions: tuple[int, ...] = field(repr=False, compare=False)

    @cached_property
    def longest_path(self) -> int:
        """Number of vertices on a longest path (exponential; fine for small components)."""
        return _longest_path_vertices(self._adj, self._positions)


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[Component, ...]

    def of_kind(self, kind: str) -> list[Component]:
        return [c for c in self.components if c.kind == kind]


def _has_spanning_c4(adj: Sequence[int], vs: Sequence[int]) -> bool:
    a, b, c, d = vs
    for x, y, z in ((b, c, d), (b, d, c), (c, b, d)):
        cyc = (a, x, y, z)
        if all(adj[cyc[i]] >> cyc[(i + 1) % 4] & 1 for i in range(4)):
            return True
    return False


def _classify(adj: Sequence[int], vs: Sequence[int], m: int) -> str:
    k = len(vs)
    if k == 1:
        return "K1"
    if k == 2:
        return "K2"
    if k == 3 and m == 3:
        return "K3"
    if k == 4 and m >= 4 and _has_spanning_c4(adj, vs):
        return "C4-like"
    return "other"


def components(H: SimpleGraph) -> ComponentReport:
    """Connected components, ordered by smallest label, each classified."""
    adj = H.adjacency
    seen = 0
    comps = []
    for s in _label_order(H):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        positions = tuple(i for i in range(H.order) if comp >> i & 1)
        m = sum((adj[i] & comp).bit_count() for i in positions) // 2
        comps.append(
            Component(
                vertices=tuple(sorted(H.labels[i] for i in positions)),
                kind=_classify(adj, positions, m),
                edge_count=m,
                has_cycle=m >= len(positions),
                _adj=adj,
                _positions=positions,
            )
        )
    return ComponentReport(tuple(comps))


def min_degree_2graph(H: SimpleGraph) -> int:
    if H.order == 0:
        raise TooFewVertices("minimum degree of a graph with no vertices")
    return min(row.bit_count() for row in H.adjacency)


def is_triangle_free(H: SimpleGraph) -> bool:
    adj = H.adjacency
    return not any(adj[i] & adj[j] for i, j in H.edges)


def turan_part_sizes(n: int, r: int) -> list[int]:
    """Part sizes of T(n, r), larger parts first."""
    if r < 1:
        raise RangeError(f"Turán graph needs r >= 1, got {r}")
    if n < 0:
        raise RangeError(f"n must be non-negative, got {n}")
    q, s = divmod(n, r)
    return [q + 1] * s + [q] * (r - s)


def turan_edge_count(n: int, r: int) -> int:
    return comb(n, 2) - sum(comb(p, 2) for p in turan_part_sizes(n, r))


def max_edges_clique_free_bruteforce(n: int, r: int) -> int:
    """Largest edge count of a K_{r+1}-free graph on ``n`` labelled vertices.

    Exhaustive branch-and-bound over edge subsets; independent of any
    closed form.  Limited to ``n <= 8``.
    """
    if n > 8:
        raise TooLarge(f"exhaustive search limited to n <= 8, got {n}")
    if r < 1:
        raise RangeError(f"r must be >= 1, got {r}")
    if n < 0:
        raise RangeError(f"n must be non-negative, got {n}")
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    bit = {p: 1 << i for i, p in enumerate(pairs)}
    # cliques[i]: masks of K_{r+1} copies whose largest-index edge is i
    cliques: list[list[int]] = [[] for _ in range(m)]
    if r + 1 <= n:
        for vs in combinations(range(n), r + 1):
            cm = 0
            for p in combinations(vs, 2):
                cm |= bit[p]
            cliques[cm.bit_length() - 1].append(cm)

    best = 0

    def dfs(i: int, cur: int, count: int) -> None:
        nonlocal best
        if count + (m - i) <= best:
            return
        if i == m:
            best = count
            return
        nxt = cur | (1 << i)
        if not any(cm & nxt == cm for cm in cliques[i]):
            dfs(i + 1, nxt, count + 1)
        dfs(i + 1, cur, count)

    dfs(0, 0, 0)
    return best
