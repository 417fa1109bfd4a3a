"""Command-line front end.

Exit codes: 0 success (covered / holds), 1 a valid negative answer,
2 usage or input error.  Reports are JSON with sorted keys; everything except
the ``timing`` section is deterministic.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .constructions import construction1, construction2, turan_graph
from .core import ThreeGraph, min_codegree
from .covering import fast_witness_via_link, find_c6_through
from .errors import C6CoverError, ParseError
from .fileio import parse_graph, serialize
from .patterns import turan_part_sizes
from .search import compute_threshold
from . import verify as suites

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def parse_range(text: str) -> range:
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _emit(command: list[str], digest_source: bytes, result: dict, wall: float, seed: int | None = None) -> None:
    report = {
        "command": command,
        "input_digest": hashlib.sha256(digest_source).hexdigest(),
        "toolkit_version": __version__,
        "seed": seed,
        "result": result,
        "timing": {"wall_time": round(wall, 6)},
    }
    print(json.dumps(report, sort_keys=True, indent=2))


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_ERROR


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.kind == "c1":
            G = construction1(args.n)
            params = {"kind": "c1", "n": args.n, "apex": 0}
        elif args.kind == "c2":
            G, p = construction2(args.n)
            params = {"kind": "c2", "n": p.n, "b": p.b, "a_floor": p.a_floor, "a_ceil": p.a_ceil, "apex": p.apex}
        else:
            if args.r is None:
                return _fail("turan needs --r")
            G = turan_graph(args.n, args.r)
            params = {"kind": "turan", "n": args.n, "r": args.r, "parts": turan_part_sizes(args.n, args.r)}
    except C6CoverError as exc:
        return _fail(str(exc))
    params["edges"] = len(G.edges)
    text = serialize(G)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            return _fail(f"cannot write {args.out}: {exc}")
        params["out"] = args.out
    else:
        params["graph"] = text
    print(json.dumps(params, sort_keys=True))
    return EXIT_OK


def _read_input(path: str) -> tuple[bytes, ThreeGraph]:
    with open(path, "rb") as fh:
        raw = fh.read()
    G = parse_graph(raw.decode("utf-8"), arity=3)
    assert isinstance(G, ThreeGraph)
    return raw, G


def cmd_check_cover(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    try:
        raw, G = _read_input(args.path)
    except ParseError as exc:
        print(f"{args.path}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, UnicodeDecodeError, C6CoverError) as exc:
        return _fail(str(exc))
    if args.vertex is not None and not 0 <= args.vertex < G.n:
        return _fail(f"vertex {args.vertex} not in [0, {G.n})")
    use_fast = args.fast and G.n >= 2 and min_codegree(G) >= 2
    vertices = [args.vertex] if args.vertex is not None else list(range(G.n))
    per_vertex = {}
    for v in vertices:
        w, how = None, "oracle"
        if use_fast:
            w, how = fast_witness_via_link(G, v), "fast"
        if w is None:
            w, how = find_c6_through(G, v), "oracle"
        per_vertex[str(v)] = {"covered": w is not None, "witness": list(w.roles) if w else None,
                              "method": how if w else None}
    uncovered = [int(v) for v, r in per_vertex.items() if not r["covered"]]
    result = {"n": G.n, "edges": len(G.edges), "vertices": per_vertex, "uncovered": uncovered,
              "fully_covered": not uncovered, "fast": bool(args.fast)}
    _emit(args.argv, raw, result, time.perf_counter() - t0)
    return EXIT_OK if not uncovered else EXIT_NEGATIVE


def cmd_thresholds(args: argparse.Namespace) -> int:
    mode = "randomized" if args.randomized else args.mode
    shards = args.shards or os.cpu_count() or 1
    workers = min(shards, os.cpu_count() or 1)
    try:
        res = compute_threshold(args.kind, args.n, mode=mode, shards=shards, workers=workers,
                                trials=args.trials, seed=args.seed)
    except C6CoverError as exc:
        return _fail(f"{exc}. Supported: exhaustive n <= 6, exact n <= 7, --randomized for any n")
    payload = res.payload()
    # lower bounds are never shown as exact values
    payload["display"] = f"{'=' if res.exact else '>='} {res.value}"
    digest = json.dumps({"kind": args.kind, "n": args.n, "mode": payload["mode"], "seed": res.seed},
                        sort_keys=True).encode()
    _emit(args.argv, digest, payload, res.wall_time, res.seed)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    trials = args.trials if args.trials is not None else 1000
    s = args.suite
    try:
        if s == "structure":
            reports = [suites.structure_suite(args.m or range(5, 8))]
        elif s == "turan":
            reports = [suites.turan_suite(args.n or range(3, 9))]
        elif s == "constructions":
            ns = args.n or range(7, 61)
            reports = [suites.constructions_suite([n for n in ns if n >= 3], [n for n in ns if n >= 7])]
        elif s == "lemma31":
            ns = tuple(args.n or range(7, 10))
            reports = [suites.lemma31_exhaustive(6), suites.lemma31_random(trials, args.seed, ns)]
        else:
            ns = args.n or range(9, 10)
            r41, r42 = suites.claims_construction2(range(7, 41))
            reports = [r41, r42]
            for n in ns:
                reports.extend(suites.claims_random(trials, args.seed, n))
            keep = "claim41" if s == "claim41" else "claim42"
            reports = [r for r in reports if r.suite.startswith(keep)]
    except C6CoverError as exc:
        return _fail(str(exc))
    violations = sum(r.violations for r in reports)
    result = {"suite": s, "violations": violations, "reports": [r.as_dict() for r in reports]}
    digest = json.dumps({"suite": s, "trials": trials, "seed": args.seed,
                         "n": list(args.n) if args.n else None, "m": list(args.m) if args.m else None},
                        sort_keys=True).encode()
    _emit(args.argv, digest, result, time.perf_counter() - t0, args.seed)
    return EXIT_OK if violations == 0 else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="c6cover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a construction or Turán graph")
    g.add_argument("kind", choices=["c1", "c2", "turan"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--r", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check-cover", help="report which vertices lie in a copy of C6³")
    c.add_argument("path")
    c.add_argument("--vertex", type=int)
    c.add_argument("--fast", action="store_true", help="try the link-pattern witness first when δ₂ ≥ 2")
    c.set_defaults(func=cmd_check_cover)

    t = sub.add_parser("thresholds", help="compute c₂ (codegree) or c₁ (degree) at small n")
    t.add_argument("kind", choices=["codegree", "degree"])
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--mode", choices=["exhaustive", "exact", "canonical"])
    t.add_argument("--randomized", action="store_true", help="lower bound by random greedy search")
    t.add_argument("--shards", type=int, default=None, help="default: available CPUs")
    t.add_argument("--trials", type=int, default=50)
    t.add_argument("--seed", type=int, default=0)
    t.set_defaults(func=cmd_thresholds)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["lemma31", "claim41", "claim42", "structure", "turan", "constructions"])
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--n", type=parse_range)
    v.add_argument("--m", type=parse_range)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    return args.func(args)
