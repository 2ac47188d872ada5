"""Search for an induced member of the two-triangle family."""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

from ..errors import GraphInputError
from ..families import BrousekSpec, brousek
from ..graph import Graph, induced_subgraph, iter_bits
from ..patterns import require_claw_free


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for x in range(g.n):
        for y in iter_bits(g.rows[x] >> (x + 1) << (x + 1)):
            for z in iter_bits(g.rows[x] & g.rows[y] >> (y + 1) << (y + 1)):
                out.append((x, y, z))
    return out


def _induced_paths(g: Graph, a: int, b: int, chosen: int, inner: int) -> Iterator[list[int]]:
    """Induced ``a``-``b`` paths with exactly ``inner`` new vertices, attached to
    the already chosen set only at ``a`` and ``b``."""
    rows = g.rows
    path: list[int] = []

    def extend(prev: int, used: int) -> Iterator[list[int]]:
        last = len(path) + 1 == inner
        allowed = (1 << prev | 1 << b) if last else 1 << prev
        for v in iter_bits(rows[prev] & ~used):
            if rows[v] & used != allowed & used or (last and not rows[v] >> b & 1):
                continue
            path.append(v)
            if last:
                yield list(path)
            else:
                yield from extend(v, used | 1 << v)
            path.pop()

    yield from extend(a, chosen)


def brousek_witness(g: Graph, cap: int | None = None) -> tuple[BrousekSpec, tuple[int, ...]] | None:
    """First induced two-triangle subgraph of order <= ``cap``.

    Returns the connector spec and the embedding (host vertex for each
    vertex of ``brousek(spec)``), or ``None``. Triangle pairs are scanned in
    lexicographic order; per index a triangle connector is forced when
    ``a_i b_i`` is an edge, otherwise paths are tried shortest first.
    """
    require_claw_free(g)
    if cap is None:
        cap = g.n
    if cap > g.n:
        raise GraphInputError(f"cap {cap} exceeds the host order {g.n}")
    if cap < 9:
        return None
    rows = g.rows
    tris = triangles(g)
    for ia, A in enumerate(tris):
        amask = 1 << A[0] | 1 << A[1] | 1 << A[2]
        for B0 in tris[ia + 1:]:
            bmask = 1 << B0[0] | 1 << B0[1] | 1 << B0[2]
            if amask & bmask:
                continue
            for B in permutations(B0):
                if any(rows[A[i]] >> B[j] & 1 for i in range(3) for j in range(3) if i != j):
                    continue
                found = _connect(g, A, B, amask | bmask, cap - 6)
                if found is not None:
                    spec, extra = found
                    return spec, tuple(A) + tuple(B) + tuple(extra)
    return None


def _connect(g: Graph, A, B, chosen: int, budget: int):
    rows = g.rows
    spec: list = []
    extra: list[int] = []

    def step(i: int, chosen: int, budget: int):
        if i == 3:
            return BrousekSpec(tuple(spec)), list(extra)
        a, b = A[i], B[i]
        if rows[a] >> b & 1:
            if budget < 1:
                return None
            ab = 1 << a | 1 << b
            for c in iter_bits(rows[a] & rows[b] & ~chosen):
                if rows[c] & chosen != ab:
                    continue
                spec.append("T")
                extra.append(c)
                got = step(i + 1, chosen | 1 << c, budget - 1)
                if got:
                    return got
                spec.pop()
                extra.pop()
            return None
        for inner in range(1, budget + 1):
            for path in _induced_paths(g, a, b, chosen, inner):
                spec.append(inner + 2)
                extra.extend(path)
                pmask = 0
                for v in path:
                    pmask |= 1 << v
                got = step(i + 1, chosen | pmask, budget - inner)
                if got:
                    return got
                spec.pop()
                del extra[-inner:]
        return None

    return step(0, chosen, budget)


def verify_witness(g: Graph, spec: BrousekSpec, embedding: tuple[int, ...]) -> bool:
    """The embedding's image induces exactly ``brousek(spec)`` under the layout labels."""
    return induced_subgraph(g, list(embedding)) == brousek(spec).graph
