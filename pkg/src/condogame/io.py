"""Graph ingestion (edge list, graph6) and result records."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterator

from .graph import (
    MAX_VERTICES,
    WIDE_MAX_VERTICES,
    Graph,
    GraphError,
    LabeledGraph,
    canonical_labels,
)


class ParseError(ValueError):
    """Malformed graph input; ``position`` is a 1-based line or 0-based byte offset."""

    def __init__(self, message: str, position: int | None = None, unit: str = "line") -> None:
        where = f" ({unit} {position})" if position is not None else ""
        super().__init__(message + where)
        self.position = position


# graph6 ----------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str | bytes, capacity: int | None = None) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("graph6 input is not ASCII", exc.start, "byte") from None
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise ParseError("empty graph6 string", 0, "byte")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range", pos, "byte")
    vals = [ord(c) - 63 for c in text]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = vals[1] << 12 | vals[2] << 6 | vals[3], 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    else:
        raise ParseError("truncated graph6 order field", len(vals), "byte")
    limit = capacity or WIDE_MAX_VERTICES
    if n > limit:
        raise ParseError(f"order {n} exceeds capacity {limit}", 0, "byte")
    if n == 0:
        raise ParseError("graph6 order must be at least 1", 0, "byte")
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} adjacency bytes, found {len(body)}", pos, "byte")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if k % 6 and body[-1] & ((1 << (6 - k % 6)) - 1):
        raise ParseError("nonzero padding bits", pos + need - 1, "byte")
    if capacity is None:
        capacity = MAX_VERTICES if n <= MAX_VERTICES else WIDE_MAX_VERTICES
    return Graph(n, tuple(adj), capacity)


def read_graph6_lines(data: str | bytes) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line number, graph)`` for every nonblank line."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    for lineno, line in enumerate(data.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, decode_graph6(line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", lineno) from None


# edge list ---------------------------------------------------------------------


def parse_edgelist(text: str | bytes) -> LabeledGraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise ParseError("expected header 'n <order>'", lineno)
            n = int(parts[1])
            if n < 1:
                raise ParseError("order must be at least 1", lineno)
            if n > WIDE_MAX_VERTICES:
                raise ParseError(f"order {n} exceeds capacity {WIDE_MAX_VERTICES}", lineno)
            continue
        if parts[0] == "label":
            if len(parts) != 3 or not parts[2].isdigit():
                raise ParseError("expected 'label <name> <index>'", lineno)
            name, v = parts[1], int(parts[2])
            if v >= n:
                raise ParseError(f"label index {v} out of range", lineno)
            if name in labels:
                raise ParseError(f"duplicate label {name!r}", lineno)
            labels[name] = v
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise ParseError(f"edge ({u}, {v}) out of range", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("missing header 'n <order>'", 1)
    g = Graph.from_edges(n, edges)
    if not labels:
        labels = canonical_labels(n)
    try:
        return LabeledGraph(g, labels)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_edgelist(lg: LabeledGraph) -> str:
    g = lg.graph
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    lines += [f"label {name} {v}" for name, v in lg.labels.items()]
    return "\n".join(lines) + "\n"


def parse_graph(data: str | bytes, fmt: str = "auto") -> LabeledGraph:
    """Parse ``edgelist`` or ``graph6`` input; ``auto`` sniffs the ``n`` header."""
    if isinstance(data, bytes):
        text = data.decode("utf-8", errors="replace")
    else:
        text = data
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
        fmt = "edgelist" if first.startswith("n ") or first == "n" else "graph6"
    if fmt == "edgelist":
        return parse_edgelist(data)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty graph6 input", 0, "byte")
        g = decode_graph6(lines[0])
        return LabeledGraph(g, canonical_labels(g.n))
    raise ParseError(f"unknown format {fmt!r}")


# results -----------------------------------------------------------------------


@dataclass
class ResultRecord:
    graph_id: str
    predominated: list[str]
    first: str
    value: int | str | None
    nodes: int
    elapsed: float
    status: str = "ok"

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)
