"""Hefty vertices (degree >= n/3 + 1) and the independent-triple property."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from ..cycles import hamilton_cycle
from ..errors import PreconditionError
from ..formats import encode_graph6
from ..graph import Graph, is_two_connected
from ..patterns import require_claw_free
from ..regions import RegionDecomposition, associated, decompose


def is_hefty(g: Graph, v: int) -> bool:
    return 3 * g.degree(v) >= g.n + 3


class HeftyVerdict(NamedTuple):
    """``ok`` iff some member of the triple is not hefty; ``vertex`` is the first such."""

    ok: bool
    vertex: int | None

    def __bool__(self) -> bool:
        return self.ok


def hefty_triple_check(g: Graph, triple: Sequence[int],
                       d: RegionDecomposition | None = None) -> HeftyVerdict:
    """Check that one of three pairwise nonadjacent vertices is not hefty.

    Requires ``v1`` dissociated from ``v2`` and ``v3``, and ``v2, v3`` with
    at most one common neighbour.
    """
    require_claw_free(g)
    if len(triple) != 3 or len(set(triple)) != 3:
        raise PreconditionError("need three distinct vertices")
    for v in triple:
        g.check_vertex(v)
    v1, v2, v3 = triple
    for x, y in ((v1, v2), (v1, v3), (v2, v3)):
        if g.has_edge(x, y):
            raise PreconditionError(f"vertices {x} and {y} are adjacent")
    if d is None:
        d = decompose(g)
    for y in (v2, v3):
        if associated(d, v1, y):
            raise PreconditionError(f"vertices {v1} and {y} are associated")
    if (g.rows[v2] & g.rows[v3]).bit_count() > 1:
        raise PreconditionError(f"vertices {v2} and {v3} have more than one common neighbour")
    for v in triple:
        if not is_hefty(g, v):
            return HeftyVerdict(True, v)
    return HeftyVerdict(False, None)


@dataclass
class Claim1Report:
    graph6: str
    triples_checked: int
    violations: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def claim1_sweep(g: Graph, d: RegionDecomposition | None = None) -> Claim1Report:
    """Every pairwise nonadjacent, pairwise dissociated triple of a non-hamiltonian
    2-connected claw-free graph contains a vertex that is not hefty."""
    require_claw_free(g)
    if not is_two_connected(g):
        raise PreconditionError("graph is not 2-connected")
    if hamilton_cycle(g) is not None:
        raise PreconditionError("graph is hamiltonian")
    if d is None:
        d = decompose(g)
    # dissociated means nonadjacent in the closure, which also rules out adjacency in g
    far = [d.closed.vertex_mask & ~d.closed.rows[v] & ~(1 << v) for v in range(g.n)]
    checked = 0
    bad = []
    for v1 in range(g.n):
        for v2 in range(v1 + 1, g.n):
            if not far[v1] >> v2 & 1:
                continue
            rest = far[v1] & far[v2] >> (v2 + 1) << (v2 + 1)
            while rest:
                low = rest & -rest
                v3 = low.bit_length() - 1
                rest ^= low
                checked += 1
                if is_hefty(g, v1) and is_hefty(g, v2) and is_hefty(g, v3):
                    bad.append((v1, v2, v3))
    return Claim1Report(encode_graph6(g), checked, bad)
