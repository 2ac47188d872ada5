"""Immutable simple graph on vertices ``0..n-1`` with bitmask adjacency rows.

Row ``rows[v]`` has bit ``u`` set iff ``uv`` is an edge. Every other module
works on these rows directly, so neighbourhood intersections are single
integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphInputError, UnsupportedSizeError

MAX_ORDER = 64
MAX_ISO_ORDER = 16


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if not 0 <= n <= MAX_ORDER:
            raise UnsupportedSizeError(f"order {n} outside 0..{MAX_ORDER}")
        if len(self.rows) != n:
            raise GraphInputError("row count does not match order")
        full = (1 << n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise GraphInputError(f"row {v} has a self-loop or out-of-range bit")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphInputError(f"adjacency not symmetric at ({v}, {u})")

    # construction -------------------------------------------------------

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        """Build without validation; callers guarantee symmetric, loop-free rows."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphInputError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphInputError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    # queries ------------------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphInputError(f"vertex {v!r} not in 0..{self.n - 1}")

    def adj(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitmask."""
        return self.rows[v]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self.rows[v]:
                return False
        return True

    # derived graphs -----------------------------------------------------

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            if u == v:
                raise GraphInputError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph._trusted(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphInputError("relabeling is not a permutation of the vertices")
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[u] for u in iter_bits(self.rows[v]))
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def induced_subgraph(g: Graph, s: Sequence[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled ``0..len(s)-1`` in ``s`` order."""
    if len(set(s)) != len(s):
        raise GraphInputError("vertex set has duplicates")
    for v in s:
        g.check_vertex(v)
    rows = []
    for v in s:
        row = g.rows[v]
        rows.append(mask_of(i for i, u in enumerate(s) if row >> u & 1))
    return Graph(len(s), tuple(rows))


def distance(g: Graph, x: int, y: int) -> int | None:
    """Shortest-path edge count from ``x`` to ``y``; ``None`` if unreachable."""
    g.check_vertex(x)
    g.check_vertex(y)
    seen = frontier = 1 << x
    d = 0
    while frontier:
        if frontier >> y & 1:
            return d
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return None


def component_mask(g: Graph, start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` inside ``g[within]``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_connected_mask(g: Graph, within: int) -> bool:
    if not within:
        return True
    start = (within & -within).bit_length() - 1
    return component_mask(g, start, within) == within


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g, g.vertex_mask)


def cut_vertices(g: Graph) -> list[int]:
    """Articulation points of a connected graph (vertices whose removal disconnects it)."""
    full = g.vertex_mask
    return [v for v in range(g.n) if g.n > 2 and not is_connected_mask(g, full & ~(1 << v))]


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


# isomorphism ----------------------------------------------------------------


def _refine(graphs: Sequence[Graph]) -> list[list[int]] | None:
    """Joint colour refinement; colours are comparable across ``graphs``.

    Returns ``None`` as soon as the colour histograms diverge.
    """
    colors = [[g.degree(v) for v in range(g.n)] for g in graphs]
    ncolors = -1
    while True:
        sigs = [
            [(c[v], tuple(sorted(c[u] for u in iter_bits(g.rows[v])))) for v in range(g.n)]
            for g, c in zip(graphs, colors)
        ]
        palette = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colors = [[palette[s] for s in ss] for ss in sigs]
        hists = [sorted(c) for c in colors]
        if any(h != hists[0] for h in hists[1:]):
            return None
        if len(palette) == ncolors:
            return colors
        ncolors = len(palette)


def refinement_invariant(g: Graph) -> tuple:
    """Isomorphism invariant: order, size and the stable refined colour multiset.

    Colours are named by nested signatures, so values are comparable
    across graphs refined separately.
    """
    colors: list = [g.degree(v) for v in range(g.n)]
    nclasses = -1
    for _ in range(g.n + 1):
        colors = [hash((colors[v], tuple(sorted(colors[u] for u in iter_bits(g.rows[v]))))) for v in range(g.n)]
        k = len(set(colors))
        if k == nclasses:
            break
        nclasses = k
    return (g.n, g.size, tuple(sorted(colors)))


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``f`` with ``uv ∈ E(g) ⇔ f(u)f(v) ∈ E(h)``, or ``None``."""
    for x in (g, h):
        if x.n > MAX_ISO_ORDER:
            raise UnsupportedSizeError(f"isomorphism test supports order <= {MAX_ISO_ORDER}")
    if g.n != h.n or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    n = g.n
    if n == 0:
        return []
    refined = _refine([g, h])
    if refined is None:
        return None
    cg, ch = refined
    by_color: dict[int, int] = {}
    for v in range(n):
        by_color[ch[v]] = by_color.get(ch[v], 0) | 1 << v
    # smallest classes first, then stay connected to what is already placed
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        attached = [v for v in remaining if g.rows[v] & placed]
        pool = attached or list(remaining)
        v = min(pool, key=lambda u: (by_color[cg[u]].bit_count(), u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    f = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        cand = by_color[cg[v]] & ~used
        for j in range(i):
            u = order[j]
            cand &= h.rows[f[u]] if g.rows[v] >> u & 1 else ~h.rows[f[u]]
            if not cand:
                return False
        for w in iter_bits(cand):
            f[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
        f[v] = -1
        return False

    return f if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
