"""Pattern catalog, induced-copy search and the end-vertex degree condition.

Catalog vertex numbering (0-based):

* ``P(i)``: path ``v_1 .. v_i`` -> ``0 .. i-1``.
* ``C3``: triangle ``0 1 2``.
* ``Z(i)``: triangle ``t_1 t_2 t_3 = 0 1 2`` and path ``t_3 z_1 .. z_i`` with ``z_j = 2 + j``.
* ``B`` (bull): triangle ``0 1 2``, pendant ``3`` at ``0`` and ``4`` at ``1``.
* ``N`` (net): triangle ``0 1 2``, pendants ``3, 4, 5`` at ``0, 1, 2``.
* ``W`` (wounded): triangle ``0 1 2``, pendant ``3`` at ``0``, path ``1 4 5``.
* ``claw``: centre ``0``, leaves ``1 2 3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal, NamedTuple

from .errors import ClawError, GraphInputError
from .graph import Graph, iter_bits

Embedding = tuple[int, ...]


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph
    end_vertices: tuple[int, ...]

    @classmethod
    def from_graph(cls, name: str, graph: Graph) -> "Pattern":
        ends = tuple(v for v in range(graph.n) if graph.degree(v) == 1)
        return cls(name, graph, ends)

    @property
    def order(self) -> int:
        return self.graph.n


def _triangle_plus(name: str, n: int, extra: list[tuple[int, int]]) -> Pattern:
    return Pattern.from_graph(name, Graph.from_edges(n, [(0, 1), (0, 2), (1, 2)] + extra))


def path_pattern(i: int) -> Pattern:
    if i < 2:
        raise GraphInputError("P_i needs i >= 2")
    return Pattern.from_graph(f"P{i}", Graph.path(i))


def z_pattern(i: int) -> Pattern:
    if i < 1:
        raise GraphInputError("Z_i needs i >= 1")
    tail = [(2, 3)] + [(2 + j, 3 + j) for j in range(1, i)]
    return _triangle_plus(f"Z{i}", 3 + i, tail)


def cycle3() -> Pattern:
    return _triangle_plus("C3", 3, [])


def bull() -> Pattern:
    return _triangle_plus("B", 5, [(0, 3), (1, 4)])


def net() -> Pattern:
    return _triangle_plus("N", 6, [(0, 3), (1, 4), (2, 5)])


def wounded() -> Pattern:
    return _triangle_plus("W", 6, [(0, 3), (1, 4), (4, 5)])


def claw() -> Pattern:
    return Pattern.from_graph("claw", Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))


def make_pattern(kind: str, i: int | None = None) -> Pattern:
    """Build a catalog pattern.

    ``kind`` is either a full name (``"P6"``, ``"Z2"``, ``"N"``, ``"claw"``,
    case-insensitive) or a family letter with its parameter in ``i``.
    """
    key = kind.strip().upper()
    m = re.fullmatch(r"([PZ])(\d+)", key)
    if m:
        key, i = m.group(1), int(m.group(2))
    if key == "P":
        if i is None:
            raise GraphInputError("path pattern needs a length")
        return path_pattern(i)
    if key == "Z":
        if i is None:
            raise GraphInputError("Z pattern needs an index")
        return z_pattern(i)
    simple = {"C3": cycle3, "B": bull, "BULL": bull, "N": net, "NET": net,
              "W": wounded, "WOUNDED": wounded, "CLAW": claw, "K13": claw}
    if key in simple:
        return simple[key]()
    raise GraphInputError(f"unknown pattern {kind!r}")


def end_vertices(p: Pattern) -> tuple[int, ...]:
    return p.end_vertices


# induced-copy search --------------------------------------------------------


def _bfs_order(p: Graph, root: int) -> list[int]:
    order = [root]
    seen = 1 << root
    i = 0
    while len(order) < p.n:
        if i == len(order):
            # next component
            v = next(u for u in range(p.n) if not seen >> u & 1)
            order.append(v)
            seen |= 1 << v
        for u in iter_bits(p.rows[order[i]] & ~seen):
            order.append(u)
            seen |= 1 << u
        i += 1
    return order


def _embeddings(g: Graph, p: Graph, root: int = 0, root_image: int | None = None):
    """Yield every induced embedding of ``p`` in ``g`` as a tuple indexed by pattern vertex."""
    k = p.n
    if k == 0:
        yield ()
        return
    if k > g.n:
        return
    order = _bfs_order(p, root)
    image = [-1] * k
    full = g.vertex_mask

    def extend(i: int, used: int):
        if i == k:
            yield tuple(image)
            return
        v = order[i]
        if i == 0:
            cand = full if root_image is None else (1 << root_image)
        else:
            cand = full & ~used
            for j in range(i):
                u = order[j]
                if p.rows[v] >> u & 1:
                    cand &= g.rows[image[u]]
                else:
                    cand &= ~g.rows[image[u]]
                if not cand:
                    return
        for w in iter_bits(cand):
            image[v] = w
            yield from extend(i + 1, used | 1 << w)
        image[v] = -1

    yield from extend(0, 0)


def find_induced(g: Graph, p: Pattern, mode: Literal["first", "all"] = "first") -> list[Embedding]:
    """Induced embeddings of ``p`` in ``g``.

    The search is rooted at the pattern's first end vertex (vertex 0 if it
    has none) and tries host images in increasing order, so ``"first"``
    returns an embedding whose root image is as small as possible.
    ``mode="all"`` keeps one embedding per (image set, end-vertex image set) pair.
    """
    root = p.end_vertices[0] if p.end_vertices else 0
    if mode == "first":
        for emb in _embeddings(g, p.graph, root=root):
            return [emb]
        return []
    if mode != "all":
        raise GraphInputError(f"unknown mode {mode!r}")
    seen = {}
    for emb in _embeddings(g, p.graph, root=root):
        key = (frozenset(emb), frozenset(emb[e] for e in p.end_vertices))
        seen.setdefault(key, emb)
    return list(seen.values())


def is_free(g: Graph, p: Pattern) -> bool:
    if p.name == "claw":
        return find_claw(g) is None
    return not find_induced(g, p, "first")


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """First induced claw as (centre, leaf, leaf, leaf), or ``None``."""
    rows = g.rows
    for c in range(g.n):
        nb = rows[c]
        if nb.bit_count() < 3:
            continue
        for a in iter_bits(nb):
            # leaves after a, nonadjacent to a
            rest = nb & ~rows[a] & ~((2 << a) - 1)
            for b in iter_bits(rest):
                third = rest & ~rows[b] & ~((2 << b) - 1)
                if third:
                    return (c, a, b, (third & -third).bit_length() - 1)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def require_claw_free(g: Graph) -> None:
    w = find_claw(g)
    if w is not None:
        raise ClawError(w)


# end-vertex degree condition ------------------------------------------------


def _end_orbits(p: Pattern) -> list[int]:
    """One end vertex per orbit of the pattern's automorphism group."""
    reps: list[int] = []
    covered = 0
    autos = list(_embeddings(p.graph, p.graph))
    for e in p.end_vertices:
        if covered >> e & 1:
            continue
        reps.append(e)
        for a in autos:
            covered |= 1 << a[e]
    return reps


def phi_end_vertex_set(g: Graph, p: Pattern) -> list[int]:
    """Host vertices that are the image of an end vertex in some induced copy of ``p``."""
    result = 0
    roots = _end_orbits(p)
    for v in range(g.n):
        for e in roots:
            if next(_embeddings(g, p.graph, root=e, root_image=v), None) is not None:
                result |= 1 << v
                break
    return list(iter_bits(result))


class PhiResult(NamedTuple):
    holds: bool
    vertex: int | None = None
    degree: int | None = None

    def __bool__(self) -> bool:
        return self.holds


def phi_holds(g: Graph, p: Pattern, k: int) -> PhiResult:
    """Whether every end vertex of an induced copy of ``p`` has degree >= (n + k) / 3.

    Compared as ``3 * d(v) >= n + k``; on failure the lowest violating
    vertex and its degree are returned.
    """
    threshold = g.n + k
    cheap = [v for v in range(g.n) if 3 * g.degree(v) < threshold]
    if not cheap:
        return PhiResult(True)
    roots = _end_orbits(p)
    for v in cheap:
        for e in roots:
            if next(_embeddings(g, p.graph, root=e, root_image=v), None) is not None:
                return PhiResult(False, v, g.degree(v))
    return PhiResult(True)
