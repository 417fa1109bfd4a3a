"""Exhaustive and randomized search over 3-graphs on few vertices.

A 3-graph on ``n`` vertices is encoded as a bitmask over the triples of
``[n]`` in colexicographic order (bit ``i`` is ``triples(n)[i]``).  Exhaustive
scans walk the mask range in blocks with numpy; shards are contiguous mask
ranges, so they partition the space exactly.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

import numpy as np

from .core import ThreeGraph, min_codegree, min_degree
from .covering import find_c6_through
from .errors import BadArguments, TooLarge
from .patterns import find_path_positions, find_two_disjoint_p3_positions

BLOCK = 1 << 16
MAX_MASK_BITS = 63


# -- encoding ---------------------------------------------------------------

@lru_cache(maxsize=None)
def triples(n: int) -> tuple[tuple[int, int, int], ...]:
    """All triples of ``[n]`` in colex order."""
    return tuple((a, b, c) for c in range(n) for b in range(c) for a in range(b))


def triple_index(t: tuple[int, int, int]) -> int:
    a, b, c = sorted(t)
    return comb(c, 3) + comb(b, 2) + a


def graph_to_mask(G: ThreeGraph) -> int:
    mask = 0
    for t in G.edges:
        mask |= 1 << triple_index(t)
    return mask


def mask_to_graph(n: int, mask: int) -> ThreeGraph:
    tri = triples(n)
    edges = []
    while mask:
        low = mask & -mask
        edges.append(tri[low.bit_length() - 1])
        mask ^= low
    return ThreeGraph._trusted(n, frozenset(edges))


@lru_cache(maxsize=None)
def group_masks(n: int, order: int) -> tuple[int, ...]:
    """For each vertex set of size ``order`` (lex order), the mask of triples containing it."""
    tri = triples(n)
    out = []
    for S in combinations(range(n), order):
        s = set(S)
        out.append(sum(1 << i for i, t in enumerate(tri) if s.issubset(t)))
    return tuple(out)


@lru_cache(maxsize=None)
def c6_copy_masks(n: int) -> tuple[int, ...]:
    """Every copy of C6³ inside the complete 3-graph on ``n`` vertices, as a mask."""
    out = set()
    for r in permutations(range(n), 6):
        if r[0] > r[2] or r[0] > r[4]:  # rotate so v1 is the smallest spine vertex
            continue
        out.add(
            (1 << triple_index((r[0], r[1], r[2])))
            | (1 << triple_index((r[2], r[3], r[4])))
            | (1 << triple_index((r[4], r[5], r[0])))
        )
    return tuple(sorted(out))


def _copy_vertices(n: int, mask: int) -> set[int]:
    tri = triples(n)
    return {x for i in range(len(tri)) if mask >> i & 1 for x in tri[i]}


# -- vectorised block predicates -------------------------------------------

def _min_group_count(arr: np.ndarray, groups: tuple[int, ...]) -> np.ndarray:
    out = np.full(arr.shape, 255, dtype=np.uint8)
    for g in groups:
        np.minimum(out, np.bitwise_count(arr & np.uint64(g)), out=out)
    return out


def _noncovering(arr: np.ndarray, n: int) -> np.ndarray:
    """True where some vertex lies in no C6³ of the graph."""
    if n == 0:
        return np.zeros(arr.shape, dtype=bool)
    copies = c6_copy_masks(n)
    contains = [((arr & np.uint64(c)) == np.uint64(c)) for c in copies]
    verts = [_copy_vertices(n, c) for c in copies]
    out = np.zeros(arr.shape, dtype=bool)
    for v in range(n):
        cov = np.zeros(arr.shape, dtype=bool)
        for flag, vs in zip(contains, verts):
            if v in vs:
                cov |= flag
        out |= ~cov
    return out


@lru_cache(maxsize=None)
def _perm_byte_tables(n: int) -> tuple[np.ndarray, ...]:
    """Per permutation, lookup tables mapping each mask byte to its permuted bits."""
    tri = triples(n)
    m = len(tri)
    nbytes = (m + 7) // 8
    tables = []
    for perm in permutations(range(n)):
        image = [1 << triple_index(tuple(perm[x] for x in t)) for t in tri]
        tab = np.zeros((nbytes, 256), dtype=np.uint64)
        for j in range(nbytes):
            bits = image[8 * j : 8 * j + 8]
            for byte in range(256):
                acc = 0
                for k, im in enumerate(bits):
                    if byte >> k & 1:
                        acc |= im
                tab[j, byte] = acc
        tables.append(tab)
    return tuple(tables)


def _is_canonical(arr: np.ndarray, n: int) -> np.ndarray:
    """True where the mask is the least over all vertex relabelings."""
    tables = _perm_byte_tables(n)
    nbytes = tables[0].shape[0]
    chunks = [((arr >> np.uint64(8 * j)) & np.uint64(255)).astype(np.intp) for j in range(nbytes)]
    ok = np.ones(arr.shape, dtype=bool)
    for tab in tables:
        img = tab[0][chunks[0]]
        for j in range(1, nbytes):
            img = img | tab[j][chunks[j]]
        ok &= arr <= img
    return ok


# -- enumeration ------------------------------------------------------------

@dataclass(frozen=True)
class EnumerationPlan:
    n: int
    min_codegree: int | None = None
    min_degree: int | None = None
    mode: str = "all"  # or "canonical"
    shard: tuple[int, int] = (0, 1)  # (index, count)

    @property
    def width(self) -> int:
        return comb(self.n, 3)


@dataclass
class EnumerationStats:
    scanned: int = 0
    visited: int = 0
    pruned: int = 0

    def __add__(self, other: EnumerationStats) -> EnumerationStats:
        return EnumerationStats(
            self.scanned + other.scanned, self.visited + other.visited, self.pruned + other.pruned
        )


def shard_range(total: int, index: int, count: int) -> tuple[int, int]:
    if count < 1 or not 0 <= index < count:
        raise BadArguments(f"bad shard {index}/{count}")
    return total * index // count, total * (index + 1) // count


def _check_plan(plan: EnumerationPlan) -> None:
    if plan.mode not in ("all", "canonical"):
        raise BadArguments(f"unknown enumeration mode {plan.mode!r}")
    if plan.width > MAX_MASK_BITS:
        raise TooLarge(f"C({plan.n},3) = {plan.width} exceeds the {MAX_MASK_BITS}-bit mask width")
    if plan.mode == "canonical" and plan.n > 8:
        raise TooLarge("canonical-only enumeration is limited to n <= 8")


def _iter_blocks(plan: EnumerationPlan):
    lo, hi = shard_range(1 << plan.width, *plan.shard)
    for start in range(lo, hi, BLOCK):
        yield np.arange(start, min(start + BLOCK, hi), dtype=np.uint64)


def _filter_block(arr: np.ndarray, plan: EnumerationPlan) -> np.ndarray:
    n = plan.n
    keep = np.ones(arr.shape, dtype=bool)
    pop = None
    if plan.min_codegree is not None and n >= 2:
        # every pair needs min_codegree edges and Σ codegrees = 3|E|
        pop = np.bitwise_count(arr)
        keep &= pop.astype(np.int64) * 3 >= plan.min_codegree * comb(n, 2)
        keep &= _min_group_count(arr, group_masks(n, 2)) >= plan.min_codegree
    if plan.min_degree is not None and n >= 1:
        if pop is None:
            pop = np.bitwise_count(arr)
        keep &= pop.astype(np.int64) * 3 >= plan.min_degree * n
        keep &= _min_group_count(arr, group_masks(n, 1)) >= plan.min_degree
    if plan.mode == "canonical":
        idx = np.flatnonzero(keep)
        if idx.size:
            keep[idx] = _is_canonical(arr[idx], n)
    return keep


def enumerate_3graphs(plan: EnumerationPlan, visitor: Callable[[int], object] | None = None) -> EnumerationStats:
    """Visit (as masks) the 3-graphs of ``plan`` that pass its filters.

    In ``"canonical"`` mode only the least mask of each isomorphism class is
    visited.  Returns scanned/visited/pruned counts.
    """
    _check_plan(plan)
    stats = EnumerationStats()
    for arr in _iter_blocks(plan):
        keep = _filter_block(arr, plan)
        hits = arr[keep]
        stats.scanned += arr.size
        stats.visited += hits.size
        if visitor is not None:
            for mask in hits.tolist():
                visitor(mask)
    stats.pruned = stats.scanned - stats.visited
    return stats


# -- thresholds -------------------------------------------------------------

KINDS = {"codegree": 2, "degree": 1}


@dataclass
class ThresholdResult:
    kind: str
    n: int
    value: int
    witness: ThreeGraph | None
    graphs_scanned: int
    wall_time: float
    exact: bool = True
    mode: str = "exhaustive"
    histogram_all: dict[int, int] = field(default_factory=dict)
    histogram_noncovering: dict[int, int] = field(default_factory=dict)
    seed: int | None = None

    def payload(self) -> dict:
        """Deterministic part of the result, JSON-ready (no timing)."""
        from .fileio import serialize

        return {
            "kind": self.kind,
            "n": self.n,
            "value": self.value,
            "exact": self.exact,
            "mode": self.mode,
            "graphs_scanned": self.graphs_scanned,
            "histogram_all": {str(k): v for k, v in sorted(self.histogram_all.items())},
            "histogram_noncovering": {str(k): v for k, v in sorted(self.histogram_noncovering.items())},
            "seed": self.seed,
            "witness": serialize(self.witness) if self.witness is not None else None,
        }


@dataclass
class _Partial:
    value: int = -1
    mask: int = -1
    scanned: int = 0
    hist_all: Counter = field(default_factory=Counter)
    hist_non: Counter = field(default_factory=Counter)

    def merge(self, other: _Partial) -> _Partial:
        if other.value > self.value or (other.value == self.value and 0 <= other.mask < self.mask):
            value, mask = other.value, other.mask
        else:
            value, mask = self.value, self.mask
        return _Partial(value, mask, self.scanned + other.scanned,
                        self.hist_all + other.hist_all, self.hist_non + other.hist_non)


def _scan_shard(args: tuple[int, int, int, int]) -> _Partial:
    n, order, index, count = args
    plan = EnumerationPlan(n, shard=(index, count))
    groups = group_masks(n, order)
    part = _Partial()
    for arr in _iter_blocks(plan):
        deg = _min_group_count(arr, groups)
        non = _noncovering(arr, n)
        part.scanned += arr.size
        part.hist_all.update(dict(zip(*(x.tolist() for x in np.unique(deg, return_counts=True)))))
        if non.any():
            dn = deg[non]
            part.hist_non.update(dict(zip(*(x.tolist() for x in np.unique(dn, return_counts=True)))))
            top = int(dn.max())
            first = int(arr[non][dn == top].min())
            part = part.merge(_Partial(top, first))
    return part


def _exhaustive(kind: str, n: int, shards: int, workers: int) -> ThresholdResult:
    if n > 6:
        raise TooLarge(f"exhaustive all-labeled scan is limited to n <= 6 (2^{comb(n, 3)} graphs at n={n}); "
                       "use mode='exact' for n = 7 or mode='randomized' for a lower bound")
    t0 = time.perf_counter()
    jobs = [(n, KINDS[kind], i, shards) for i in range(shards)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_shard, jobs))
    else:
        parts = [_scan_shard(j) for j in jobs]
    total = _Partial()
    for p in parts:
        total = total.merge(p)
    witness = mask_to_graph(n, total.mask) if total.mask >= 0 else None
    return ThresholdResult(kind, n, total.value, witness, total.scanned, time.perf_counter() - t0,
                           histogram_all=dict(total.hist_all), histogram_noncovering=dict(total.hist_non))


def _branch_and_bound(kind: str, n: int) -> ThresholdResult:
    """Exact maximum of δ_i over graphs in which vertex 0 lies in no C6³.

    By symmetry this is the threshold.  A triple is blocked once it would
    complete a copy of C6³ through 0, and a branch is cut when even adding
    every unblocked undecided triple cannot reach the target.  The first pass
    finds the value; the second finds the least mask attaining it.
    """
    if n > 7:
        raise TooLarge("exact branch-and-bound is limited to n <= 7")
    t0 = time.perf_counter()
    tri = triples(n)
    m = len(tri)
    groups = group_masks(n, KINDS[kind])
    others: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for c in c6_copy_masks(n):
        if 0 not in _copy_vertices(n, c):
            continue
        bits = [i for i in range(m) if c >> i & 1]
        for i in bits:
            x, y = (1 << j for j in bits if j != i)
            others[i].append((x, y))
    nodes = [0]

    def search(order: list[int], include_first: bool, target: int) -> tuple[int, int]:
        """First leaf with bound >= target in DFS order, raising target as leaves improve."""
        best = [target - 1, -1]
        improve = include_first  # pass 1 maximises; pass 2 stops at the first hit

        def dfs(k: int, incl: int, blocked: int, open_: int) -> bool:
            nodes[0] += 1
            bound = min(((incl | (open_ & ~blocked)) & g).bit_count() for g in groups)
            if bound <= best[0]:
                return False
            if k == m:
                best[0], best[1] = bound, incl
                return not improve
            i = order[k]
            bit = 1 << i
            rest = open_ & ~bit

            def take() -> bool:
                if blocked & bit:
                    return False
                nb = blocked
                for x, y in others[i]:
                    if incl & x:
                        nb |= y
                    elif incl & y:
                        nb |= x
                return dfs(k + 1, incl | bit, nb, rest)

            def skip() -> bool:
                return dfs(k + 1, incl, blocked | bit, rest)

            return (take() or skip()) if include_first else (skip() or take())

        dfs(0, 0, 0, (1 << m) - 1)
        return best[0], best[1]

    value, _ = search(list(range(m)), True, 0)
    # least mask: settle high bits first, preferring to leave them out
    _, mask = search(list(range(m - 1, -1, -1)), False, value)
    return ThresholdResult(kind, n, value, mask_to_graph(n, mask), nodes[0],
                           time.perf_counter() - t0, mode="exact")


def _canonical(kind: str, n: int) -> ThresholdResult:
    if n > 6:
        raise TooLarge("canonical-only threshold scans are practical only for n <= 6")
    t0 = time.perf_counter()
    groups = group_masks(n, KINDS[kind])
    best = _Partial()

    def visit(mask: int) -> None:
        nonlocal best
        G = mask_to_graph(n, mask)
        if any(find_c6_through(G, v) is None for v in range(n)):
            val = min((mask & g).bit_count() for g in groups)
            best.hist_non[val] += 1
            best = best.merge(_Partial(val, mask))

    stats = enumerate_3graphs(EnumerationPlan(n, mode="canonical"), visit)
    witness = mask_to_graph(n, best.mask) if best.mask >= 0 else None
    return ThresholdResult(kind, n, best.value, witness, stats.scanned, time.perf_counter() - t0,
                           mode="canonical", histogram_noncovering=dict(best.hist_non))


def random_3graph(n: int, p: float, seed: int) -> ThreeGraph:
    """Each triple (colex order) kept independently with probability ``p``.

    Driven by :class:`random.Random` (Mersenne Twister), so the output is the
    same on every platform for a given ``(n, p, seed)``.
    """
    if not 0.0 <= p <= 1.0:
        raise BadArguments(f"probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return ThreeGraph._trusted(n, frozenset(t for t in triples(n) if rng.random() < p))


def _randomized(kind: str, n: int, trials: int, seed: int) -> ThresholdResult:
    """Lower bound: random greedy graphs keeping vertex 0 uncovered, plus construction 1."""
    from .constructions import construction1

    t0 = time.perf_counter()
    measure = min_codegree if kind == "codegree" else min_degree
    rng = random.Random(seed)
    best_val, best_g = -1, None
    candidates = []
    if n >= 3:
        candidates.append(construction1(n))
    tri = list(triples(n))
    for _ in range(trials):
        order = tri[:]
        rng.shuffle(order)
        edges: set[tuple[int, int, int]] = set()
        for t in order:
            edges.add(t)
            if find_c6_through(ThreeGraph._trusted(n, frozenset(edges)), 0) is not None:
                edges.discard(t)
        candidates.append(ThreeGraph._trusted(n, frozenset(edges)))
    for G in candidates:
        val = measure(G)
        if val > best_val or (val == best_val and graph_to_mask(G) < graph_to_mask(best_g)):
            best_val, best_g = val, G
    return ThresholdResult(kind, n, best_val, best_g, len(candidates), time.perf_counter() - t0,
                           exact=False, mode="randomized", seed=seed)


def compute_threshold(kind: str, n: int, mode: str | None = None, shards: int = 1, workers: int = 1,
                      trials: int = 200, seed: int = 0) -> ThresholdResult:
    """Largest δ_i over n-vertex 3-graphs without a C6³-covering.

    Modes: ``exhaustive`` (all labelled graphs, n <= 6), ``canonical``
    (one graph per isomorphism class, n <= 6), ``exact`` (branch-and-bound,
    n <= 7) and ``randomized`` (lower bound, any n).
    """
    if kind not in KINDS:
        raise BadArguments(f"kind must be 'codegree' or 'degree', got {kind!r}")
    if n < 3:
        raise BadArguments("thresholds are computed for n >= 3")
    if mode is None:
        mode = "exhaustive" if n <= 6 else "exact" if n == 7 else None
        if mode is None:
            raise TooLarge(f"no exact mode for n = {n}; use mode='randomized' for a lower bound")
    if mode == "exhaustive":
        return _exhaustive(kind, n, shards, workers)
    if mode == "exact":
        return _branch_and_bound(kind, n)
    if mode == "canonical":
        return _canonical(kind, n)
    if mode == "randomized":
        return _randomized(kind, n, trials, seed)
    raise BadArguments(f"unknown mode {mode!r}")


def compute_c2(n: int, **kwargs) -> ThresholdResult:
    return compute_threshold("codegree", n, **kwargs)


def compute_c1(n: int, **kwargs) -> ThresholdResult:
    return compute_threshold("degree", n, **kwargs)


# -- structural step for δ >= 2 link graphs -------------------------------------

def _pairs_of(m: int) -> list[tuple[int, int]]:
    return list(combinations(range(m), 2))


def _adjacency_from_mask(m: int, pairs: list[tuple[int, int]], mask: int) -> list[int]:
    adj = [0] * m
    while mask:
        low = mask & -mask
        i, j = pairs[low.bit_length() - 1]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        mask ^= low
    return adj


def has_p5_or_2p3(m: int, adj: list[int]) -> bool:
    order = list(range(m))
    return (find_path_positions(adj, order, 5) is not None
            or find_two_disjoint_p3_positions(adj, order) is not None)


@dataclass
class StructureVerdict:
    m: int
    holds: bool
    graphs_checked: int
    counterexamples: list[list[tuple[int, int]]]


def verify_min_deg2_implies_pattern(m: int, max_counterexamples: int = 10) -> StructureVerdict:
    """Check that every graph on ``m`` vertices with minimum degree >= 2 has a P5 or a 2P3."""
    if m > 7:
        raise TooLarge(f"exhaustive 2-graph scan limited to m <= 7, got {m}")
    pairs = _pairs_of(m)
    width = len(pairs)
    vmasks = tuple(sum(1 << k for k, p in enumerate(pairs) if v in p) for v in range(m))
    checked = failures = 0
    cexs: list[list[tuple[int, int]]] = []
    for start in range(0, 1 << width, BLOCK):
        arr = np.arange(start, min(start + BLOCK, 1 << width), dtype=np.uint64)
        ok = _min_group_count(arr, vmasks) >= 2 if m else np.zeros(arr.shape, dtype=bool)
        for mask in arr[ok].tolist():
            checked += 1
            if not has_p5_or_2p3(m, _adjacency_from_mask(m, pairs, mask)):
                failures += 1
                if len(cexs) < max_counterexamples:
                    cexs.append([pairs[k] for k in range(width) if mask >> k & 1])
    return StructureVerdict(m, failures == 0, checked, cexs)

