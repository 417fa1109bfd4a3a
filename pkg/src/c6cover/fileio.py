"""Plain-text graph files.

Format: a header line ``"n m"``, then ``m`` edge lines of two or three
strictly increasing vertex indices separated by single spaces.  Lines starting
with ``#`` are comments.  The file ends with a newline.  Serialised edges are
in colexicographic order.
"""

from __future__ import annotations

from .core import SimpleGraph, ThreeGraph
from .errors import ParseError


def serialize(G: ThreeGraph | SimpleGraph) -> str:
    if isinstance(G, ThreeGraph):
        n, edges = G.n, G.sorted_edges()
    else:
        n = G.order
        edges = sorted(G.edges, key=lambda e: (e[1], e[0]))
    lines = [f"{n} {len(edges)}"]
    lines.extend(" ".join(map(str, e)) for e in edges)
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    col = 1
    for tok in line.split(" "):
        if not tok.isdigit() or not tok.isascii():
            raise ParseError("E_TOKEN", f"expected a non-negative decimal integer, got {tok!r}", lineno, col)
        out.append(int(tok))
        col += len(tok) + 1
    return out


def parse_graph(text: str, arity: int | None = None) -> ThreeGraph | SimpleGraph:
    """Parse a graph file; the edge arity is inferred unless given (edgeless files default to 3)."""
    if not text.endswith("\n"):
        raise ParseError("E_NEWLINE", "file must end with a newline", text.count("\n") + 1, 0)
    rows = [(i + 1, ln) for i, ln in enumerate(text.split("\n")[:-1]) if not ln.startswith("#")]
    if not rows:
        raise ParseError("E_HEADER", "missing header line", 1, 1)
    hline, header = rows[0]
    nums = _ints(header, hline)
    if len(nums) != 2:
        raise ParseError("E_HEADER", "header must be 'n m'", hline, 1)
    n, m = nums
    body = rows[1:]
    if len(body) != m:
        raise ParseError("E_COUNT", f"header announces {m} edges, found {len(body)}", hline, len(header))
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, ln in body:
        e = _ints(ln, lineno)
        if arity is None:
            arity = len(e)
            if arity not in (2, 3):
                raise ParseError("E_ARITY", f"edges must have 2 or 3 vertices, got {arity}", lineno, 1)
        if len(e) != arity:
            raise ParseError("E_ARITY", f"expected {arity} vertices, got {len(e)}", lineno, 1)
        col = 1
        for k, x in enumerate(e):
            if x >= n:
                raise ParseError("E_RANGE", f"vertex {x} not in [0, {n})", lineno, col)
            if k and x <= e[k - 1]:
                raise ParseError("E_ORDER", "vertices must be strictly increasing", lineno, col)
            col += len(str(x)) + 1
        t = tuple(e)
        if t in seen:
            raise ParseError("E_DUPLICATE", f"edge {ln!r} repeated", lineno, 1)
        seen.add(t)
        edges.append(t)
    if arity == 2:
        return SimpleGraph(range(n), edges)
    return ThreeGraph(n, edges)


def parse_hypergraph(text: str) -> ThreeGraph:
    G = parse_graph(text, arity=3)
    assert isinstance(G, ThreeGraph)
    return G


def read_graph(path: str) -> ThreeGraph | SimpleGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(path: str, G: ThreeGraph | SimpleGraph) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(G))
