"""Regions of a claw-free graph: maximal cliques of its closure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .closure import closure, neighborhood_cliques
from .errors import GraphInputError, PreconditionError
from .graph import Graph, iter_bits, mask_of
from .patterns import require_claw_free

INTERIOR = "interior"
FRONTIER = "frontier"


class Check(NamedTuple):
    """Outcome of a structural self-check; ``witness`` is set on failure."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class RegionDecomposition:
    base: Graph
    closed: Graph
    regions: tuple[tuple[int, ...], ...]
    membership: tuple[tuple[int, ...], ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(INTERIOR if len(m) == 1 else FRONTIER for m in self.membership)

    def is_interior(self, v: int) -> bool:
        return len(self.membership[v]) == 1

    def region_mask(self, r: int) -> int:
        return mask_of(self.regions[r])

    def interior_mask(self, r: int) -> int:
        return mask_of(v for v in self.regions[r] if self.is_interior(v))


def decompose(g: Graph) -> RegionDecomposition:
    require_claw_free(g)
    closed, _ = closure(g)
    found = set()
    for v in range(closed.n):
        parts = neighborhood_cliques(closed, v)
        if len(parts) > 2:
            raise AssertionError(f"closed graph has {len(parts)} neighbourhood cliques at {v}")
        if not parts:
            found.add((v,))
        for part in parts:
            found.add(tuple(iter_bits(part | 1 << v)))
    regions = tuple(sorted(found))
    membership: list[list[int]] = [[] for _ in range(g.n)]
    for r, region in enumerate(regions):
        for v in region:
            membership[v].append(r)
    return RegionDecomposition(g, closed, regions, tuple(tuple(m) for m in membership))


def associated(d: RegionDecomposition, u: int, v: int) -> bool:
    d.base.check_vertex(u)
    d.base.check_vertex(v)
    if u == v:
        raise GraphInputError("association is defined for distinct vertices")
    return d.closed.has_edge(u, v)


def common_region(d: RegionDecomposition, u: int, v: int) -> int | None:
    shared = set(d.membership[u]) & set(d.membership[v])
    return min(shared) if shared else None


def region_path(d: RegionDecomposition, u: int, v: int) -> list[int]:
    """Shortest induced ``u``-``v`` path of the base graph whose inner vertices are
    interior vertices of the common region; lexicographically least among ties."""
    if not associated(d, u, v):
        raise PreconditionError(f"vertices {u} and {v} are dissociated")
    g = d.base
    if g.has_edge(u, v):
        return [u, v]
    r = common_region(d, u, v)
    allowed = d.interior_mask(r) | 1 << u | 1 << v
    # distances to v inside the allowed set
    dist = {v: 0}
    frontier = [v]
    while frontier and u not in dist:
        nxt = []
        for x in frontier:
            for y in iter_bits(g.rows[x] & allowed):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    if u not in dist:
        raise AssertionError(f"no interior path between associated vertices {u} and {v}")
    path = [u]
    while path[-1] != v:
        x = path[-1]
        path.append(min(y for y in iter_bits(g.rows[x] & allowed) if dist.get(y) == dist[x] - 1))
    return path


def common_neighbor_bound_check(d: RegionDecomposition) -> Check:
    """Dissociated pairs share at most two neighbours; witness is the first violating pair."""
    g = d.base
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not d.closed.has_edge(u, v) and (g.rows[u] & g.rows[v]).bit_count() > 2:
                return Check(False, (u, v))
    return Check(True)


def frontier_neighborhood_check(d: RegionDecomposition) -> Check:
    """Validate the neighbourhood structure of frontier vertices.

    For a frontier vertex ``v`` and each of its regions ``R``: ``N_R(v)``
    is a clique, and ``v`` has an interior neighbour in ``R`` unless ``R``
    is complete without interior vertices. Witness: (vertex, region index).
    """
    g = d.base
    for v in range(g.n):
        if d.is_interior(v):
            continue
        for r in d.membership[v]:
            rmask = d.region_mask(r)
            if not g.is_clique(g.rows[v] & rmask):
                return Check(False, (v, r))
            inner = d.interior_mask(r)
            if not g.rows[v] & inner and not (g.is_clique(rmask) and not inner):
                return Check(False, (v, r))
    return Check(True)


def preimage(d: RegionDecomposition) -> Graph:
    """Triangle-free graph whose line graph is the closure.

    Vertices ``0..r-1`` stand for regions; interior vertex ``v`` adds a
    private pendant vertex, appended in increasing order of ``v``.
    """
    edges = preimage_edge_of(d)
    return Graph.from_edges(len(d.regions) + sum(map(d.is_interior, range(d.base.n))), edges)


def preimage_edge_of(d: RegionDecomposition) -> list[tuple[int, int]]:
    """The preimage edge that each vertex of the closure corresponds to."""
    r = len(d.regions)
    out = []
    nxt = r
    for v in range(d.base.n):
        m = d.membership[v]
        if len(m) == 2:
            out.append((m[0], m[1]))
        else:
            out.append((m[0], nxt))
            nxt += 1
    return out
