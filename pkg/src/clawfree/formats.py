"""graph6, edge-list and DOT serialization."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, TextIO

from .errors import FormatError, UnsupportedSizeError
from .graph import Graph

MAX_GRAPH6_ORDER = 62


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (single-byte order form, n <= 62)."""
    n = g.n
    if n > MAX_GRAPH6_ORDER:
        raise UnsupportedSizeError(f"graph6 encoding supports order <= {MAX_GRAPH6_ORDER}, got {n}")
    bits = [g.rows[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 token; surrounding whitespace is ignored."""
    token = text.strip()
    if token.startswith(">>graph6<<"):
        token = token[len(">>graph6<<"):]
    if not token:
        raise FormatError("empty graph6 token", offset=0)
    for i, ch in enumerate(token):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"byte {ord(ch)} outside 63..126", offset=i)
    n = ord(token[0]) - 63
    if n > MAX_GRAPH6_ORDER:
        raise FormatError(f"order field {n} exceeds the supported {MAX_GRAPH6_ORDER}", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(token) - 1 < nbytes:
        raise FormatError(f"truncated edge field: expected {nbytes} bytes, got {len(token) - 1}",
                          offset=len(token))
    if len(token) - 1 > nbytes:
        raise FormatError(f"trailing bytes after {nbytes}-byte edge field", offset=1 + nbytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(token[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbytes:
        pad = nbytes * 6 - nbits
        if (ord(token[nbytes]) - 63) & ((1 << pad) - 1):
            raise FormatError("nonzero padding bits", offset=nbytes)
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a graph6 stream; blank lines are skipped, errors carry the line number."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except FormatError as exc:
            raise FormatError(f"graph6 stream: {exc}", line=lineno) from None


def encode_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; blank lines and ``#`` comments ignored."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise FormatError(f"expected two integers, got {raw!r}", line=lineno)
        rows.append((lineno, int(parts[0]), int(parts[1])))
    if not rows:
        raise FormatError("missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise FormatError("negative count in header", line=rows[0][0])
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, u, v in body:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"invalid edge ({u}, {v})", line=lineno)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _dot_attrs(attrs: Mapping[str, str]) -> str:
    return ", ".join(f'{k}="{v}"' for k, v in attrs.items())


def encode_dot(g: Graph, labels: Mapping[int, str] | None = None,
               colors: Mapping[int, str] | None = None, name: str = "G") -> str:
    """Undirected DOT; ``labels`` and ``colors`` optionally decorate vertices."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = {}
        if labels and v in labels:
            attrs["label"] = labels[v]
        if colors and v in colors:
            attrs["color"] = colors[v]
            attrs["style"] = "filled"
            attrs["fillcolor"] = colors[v]
        lines.append(f"  {v} [{_dot_attrs(attrs)}];" if attrs else f"  {v};")
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graphs(stream: TextIO | Iterable[str], fmt: str = "graph6") -> Iterator[Graph]:
    """Graphs from a text stream: graph6 lines, or one edge list for the whole stream."""
    if fmt == "graph6":
        yield from read_graph6_lines(stream)
    elif fmt == "edgelist":
        yield parse_edge_list("".join(stream))
    else:
        raise FormatError(f"unknown input format {fmt!r}")
