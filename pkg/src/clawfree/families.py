"""Named graph families: two-triangle connectors, the two-clique family, line graphs.

Index layout for :func:`brousek`: ``a1 a2 a3`` are ``0 1 2``, ``b1 b2 b3``
are ``3 4 5``; connector vertices follow, for ``i = 1, 2, 3`` in turn
(``c{i}^1 .. c{i}^{k-2}`` for a path, ``c{i}`` for a triangle).

Index layout for :func:`fig2`: ``a1..ak`` are ``0..k-1``, ``b1..bk`` are
``k..2k-1`` and ``m1 m2 m3`` are ``2k, 2k+1, 2k+2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import GraphInputError
from .graph import Graph

Connector = Union[int, str]


@dataclass(frozen=True)
class BrousekSpec:
    x: tuple[Connector, Connector, Connector]

    def __post_init__(self) -> None:
        if len(self.x) != 3:
            raise GraphInputError("a connector spec has exactly three entries")
        for xi in self.x:
            if xi == "T":
                continue
            if not isinstance(xi, int) or isinstance(xi, bool) or xi < 3:
                raise GraphInputError(f"connector {xi!r} must be 'T' or a path order >= 3")

    @classmethod
    def parse(cls, text: str) -> "BrousekSpec":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise GraphInputError(f"expected three comma-separated connectors, got {text!r}")
        x = []
        for p in parts:
            if p.upper() == "T":
                x.append("T")
            elif p.isdigit():
                x.append(int(p))
            else:
                raise GraphInputError(f"bad connector {p!r}")
        return cls(tuple(x))

    @property
    def order(self) -> int:
        return 6 + sum(1 if xi == "T" else xi - 2 for xi in self.x)

    def __str__(self) -> str:
        return ",".join(str(xi) for xi in self.x)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: dict[str, int]

    def __post_init__(self) -> None:
        if len(set(self.labels.values())) != len(self.labels):
            raise GraphInputError("labels are not injective")
        for v in self.labels.values():
            self.graph.check_vertex(v)

    def __getitem__(self, name: str) -> int:
        return self.labels[name]

    def names(self) -> dict[int, str]:
        return {v: k for k, v in self.labels.items()}


def brousek(spec: BrousekSpec | str | tuple) -> LabeledGraph:
    """Two disjoint triangles ``a1a2a3``, ``b1b2b3`` with ``a_i`` joined to ``b_i``
    by an induced path on ``x_i`` vertices or by a triangle (``x_i = "T"``)."""
    if isinstance(spec, str):
        spec = BrousekSpec.parse(spec)
    elif not isinstance(spec, BrousekSpec):
        spec = BrousekSpec(tuple(spec))
    labels = {f"a{i}": i - 1 for i in (1, 2, 3)} | {f"b{i}": i + 2 for i in (1, 2, 3)}
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    nxt = 6
    for i, xi in enumerate(spec.x, 1):
        a, b = i - 1, i + 2
        if xi == "T":
            labels[f"c{i}"] = nxt
            edges += [(a, b), (a, nxt), (b, nxt)]
            nxt += 1
            continue
        prev = a
        for j in range(1, xi - 1):
            labels[f"c{i}^{j}"] = nxt
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, b))
    return LabeledGraph(Graph.from_edges(nxt, edges), labels)


def fig2(k: int) -> LabeledGraph:
    """Two disjoint ``k``-cliques joined by three disjoint paths ``a_i m_i b_i``."""
    if k < 3:
        raise GraphInputError("clique size must be at least 3")
    n = 2 * k + 3
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges += [(k + u, k + v) for u in range(k) for v in range(u + 1, k)]
    labels = {f"a{i + 1}": i for i in range(k)} | {f"b{i + 1}": k + i for i in range(k)}
    for i in range(3):
        m = 2 * k + i
        labels[f"m{i + 1}"] = m
        edges += [(i, m), (m, k + i)]
    return LabeledGraph(Graph.from_edges(n, edges), labels)


def line_graph(h: Graph) -> LabeledGraph:
    """One vertex per edge of ``h`` (sorted order), adjacent iff the edges meet."""
    edges = h.edges()
    if not edges:
        raise GraphInputError("line graph of an edgeless graph is empty")
    at: dict[int, list[int]] = {}
    for idx, (u, v) in enumerate(edges):
        at.setdefault(u, []).append(idx)
        at.setdefault(v, []).append(idx)
    pairs = set()
    for incident in at.values():
        for x in range(len(incident)):
            for y in range(x + 1, len(incident)):
                pairs.add((incident[x], incident[y]))
    labels = {f"e({u},{v})": idx for idx, (u, v) in enumerate(edges)}
    return LabeledGraph(Graph.from_edges(len(edges), sorted(pairs)), labels)
