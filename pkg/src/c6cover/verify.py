"""Verification suites: each returns a :class:`SuiteReport` with violation counts."""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass, field

from .claims import check_claim_4_1, check_claim_4_2, check_lemma_3_1, classify_edges, counterexample_text
from .constructions import construction1, construction2, construction2_degree_formulas
from .core import ThreeGraph, degree_profile, min_codegree
from .covering import cover_report, fast_witness_via_link, find_c6_through
from .exact import threshold_exceeded
from .patterns import max_edges_clique_free_bruteforce, turan_edge_count
from .search import (
    EnumerationPlan,
    _check_plan,
    _iter_blocks,
    _noncovering,
    enumerate_3graphs,
    mask_to_graph,
    random_3graph,
    verify_min_deg2_implies_pattern,
)

MAX_STORED = 5


@dataclass
class SuiteReport:
    suite: str
    checks: int = 0
    instances: int = 0
    violations: int = 0
    counterexamples: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def fail(self, text: str) -> None:
        self.violations += 1
        if len(self.counterexamples) < MAX_STORED:
            self.counterexamples.append(text)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": self.checks,
            "instances": self.instances,
            "violations": self.violations,
            "details": self.details,
            "counterexamples": self.counterexamples,
        }


def structure_suite(ms: Iterable[int]) -> SuiteReport:
    rep = SuiteReport("structure")
    for m in ms:
        res = verify_min_deg2_implies_pattern(m)
        rep.checks += res.graphs_checked
        rep.details[str(m)] = {"holds": res.holds, "graphs_checked": res.graphs_checked}
        if not res.holds:
            for cex in res.counterexamples:
                body = "".join(f"{a} {b}\n" for a, b in cex)
                rep.fail(f"# structure m={m}\n{m} {len(cex)}\n{body}")
    return rep


def turan_suite(ns: Iterable[int]) -> SuiteReport:
    rep = SuiteReport("turan")
    for n in ns:
        for r in range(2, n):
            rep.checks += 1
            brute, formula = max_edges_clique_free_bruteforce(n, r), turan_edge_count(n, r)
            if brute != formula:
                rep.fail(f"n={n} r={r}: brute force {brute} != formula {formula}")
    return rep


def constructions_suite(ns1: Iterable[int], ns2: Iterable[int]) -> SuiteReport:
    """Construction 1: δ₂ = 1 and nothing covered.  Construction 2: apex uncovered,
    degree threshold exceeded, closed-form degrees match."""
    rep = SuiteReport("constructions")
    for n in ns1:
        G = construction1(n)
        rep.instances += 1
        rep.checks += 2
        if n >= 4 and degree_profile(G).min2 != 1:
            rep.fail(counterexample_text(G, f"construction1 n={n}: min codegree != 1"))
        if cover_report(G).uncovered != tuple(range(n)):
            rep.fail(counterexample_text(G, f"construction1 n={n}: some vertex covered"))
    for n in ns2:
        G, p = construction2(n)
        rep.instances += 1
        rep.checks += 3
        prof = degree_profile(G)
        if find_c6_through(G, p.apex) is not None:
            rep.fail(counterexample_text(G, f"construction2 n={n}: apex covered"))
        if not threshold_exceeded(prof.min1, n):
            rep.fail(counterexample_text(G, f"construction2 n={n}: min degree {prof.min1} below threshold"))
        f = construction2_degree_formulas(p)
        parts = p.parts
        if any(prof.vertex_degrees[v] != f.for_part(parts[v]) for v in range(n)):
            rep.fail(counterexample_text(G, f"construction2 n={n}: degree formula mismatch"))
    return rep


def _lemma_checks(G: ThreeGraph, rep: SuiteReport, tag: str) -> None:
    for v in range(G.n):
        rep.checks += 1
        verdict = check_lemma_3_1(G, v)
        if not verdict.holds:
            rep.fail(verdict.counterexample or "")
        fast = fast_witness_via_link(G, v)
        if fast is not None:
            rep.details["fast_witnesses"] = rep.details.get("fast_witnesses", 0) + 1
            if not fast.validate(G) or v not in fast.roles or find_c6_through(G, v) is None:
                rep.fail(counterexample_text(G, f"{tag}: invalid fast witness {fast.roles} for v={v}"))


def lemma31_exhaustive(n: int = 6) -> SuiteReport:
    """Every vertex of every labelled n-vertex 3-graph with δ₂ ≥ 2."""
    rep = SuiteReport("lemma31-exhaustive")

    def visit(mask: int) -> None:
        rep.instances += 1
        _lemma_checks(mask_to_graph(n, mask), rep, f"lemma31 n={n}")

    stats = enumerate_3graphs(EnumerationPlan(n, min_codegree=2), visit)
    rep.details["graphs_scanned"] = stats.scanned
    return rep


def random_codegree2_graph(n: int, rng: random.Random) -> ThreeGraph:
    while True:
        G = random_3graph(n, rng.uniform(0.55, 0.95), rng.getrandbits(32))
        if min_codegree(G) >= 2:
            return G


def lemma31_random(trials: int, seed: int, ns: tuple[int, ...] = (7, 8, 9)) -> SuiteReport:
    rep = SuiteReport("lemma31-random")
    rng = random.Random(seed)
    for i in range(trials):
        n = ns[i % len(ns)]
        rep.instances += 1
        _lemma_checks(random_codegree2_graph(n, rng), rep, f"lemma31 n={n}")
    rep.details["seed"] = seed
    return rep


def uncovered_instance(n: int, rng: random.Random, u: int = 0) -> ThreeGraph:
    """Random 3-graph, then edges avoiding ``u`` are removed from C6³ copies until ``u`` is uncovered.

    Edges through ``u`` are never removed, so the link of ``u`` stays random.
    """
    G = random_3graph(n, rng.uniform(0.25, 0.85), rng.getrandbits(32))
    edges = set(G.edges)
    while True:
        w = find_c6_through(ThreeGraph._trusted(n, frozenset(edges)), u)
        if w is None:
            return ThreeGraph._trusted(n, frozenset(edges))
        edges.discard(rng.choice(sorted(e for e in w.edges if u not in e)))


def _claim_checks(G: ThreeGraph, u: int, rep41: SuiteReport, rep42: SuiteReport) -> int:
    """Run both claims on every qualifying vertex/edge; return the number of 4.1 checks."""
    qualifying = [v for v in range(G.n) if v != u and len(G.third_vertices(u, v)) >= 4]
    for v in qualifying:
        rep41.checks += 1
        verdict = check_claim_4_1(G, u, v)
        if not verdict.holds:
            rep41.fail(verdict.counterexample or "")
    cls = classify_edges(G, u)
    for v1, v2 in sorted(cls.E3):
        rep42.checks += 1
        verdict = check_claim_4_2(G, u, v1, v2)
        if not verdict.holds:
            rep42.fail(verdict.counterexample or "")
    return len(qualifying)


def claims_construction2(ns: Iterable[int]) -> tuple[SuiteReport, SuiteReport]:
    rep41, rep42 = SuiteReport("claim41-construction2"), SuiteReport("claim42-construction2")
    for n in ns:
        G, _ = construction2(n)
        for u in range(n):
            if find_c6_through(G, u) is None:
                rep41.instances += 1
                rep42.instances += 1
                _claim_checks(G, u, rep41, rep42)
    return rep41, rep42


def claims_exhaustive(n: int = 6) -> tuple[SuiteReport, SuiteReport]:
    """Both claims at every uncovered vertex of every labelled 3-graph on ``n`` vertices."""
    rep41, rep42 = SuiteReport("claim41-exhaustive"), SuiteReport("claim42-exhaustive")
    plan = EnumerationPlan(n)
    _check_plan(plan)
    scanned = 0
    for arr in _iter_blocks(plan):
        scanned += arr.size
        # only graphs with an uncovered vertex can meet the preconditions
        for mask in arr[_noncovering(arr, n)].tolist():
            G = mask_to_graph(n, mask)
            for u in range(n):
                if find_c6_through(G, u) is None:
                    rep41.instances += 1
                    rep42.instances += 1
                    _claim_checks(G, u, rep41, rep42)
    for rep in (rep41, rep42):
        rep.details["graphs_scanned"] = scanned
    return rep41, rep42


def claims_random(trials: int, seed: int, n: int = 9, max_attempts: int | None = None) -> tuple[SuiteReport, SuiteReport]:
    """``trials`` random instances in which vertex 0 is uncovered and has a link-degree ≥ 4 neighbour."""
    rep41, rep42 = SuiteReport("claim41-random"), SuiteReport("claim42-random")
    rng = random.Random(seed)
    attempts = 0
    limit = max_attempts if max_attempts is not None else 20 * trials
    while rep41.instances < trials and attempts < limit:
        attempts += 1
        G = uncovered_instance(n, rng)
        if not any(len(G.third_vertices(0, v)) >= 4 for v in range(1, n)):
            continue
        rep41.instances += 1
        rep42.instances += 1
        _claim_checks(G, 0, rep41, rep42)
    for rep in (rep41, rep42):
        rep.details.update(seed=seed, n=n, attempts=attempts)
    return rep41, rep42
