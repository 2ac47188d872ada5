"""Local completion and the closure of claw-free graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import PreconditionError
from .graph import Graph, is_connected_mask, iter_bits
from .patterns import find_claw, require_claw_free


@dataclass(frozen=True)
class ClosureStep:
    vertex: int
    added: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ClosureTrace:
    initial: Graph
    final: Graph
    steps: tuple[ClosureStep, ...] = field(default=())

    def replay(self) -> Graph:
        g = self.initial
        for step in self.steps:
            g = g.add_edges(step.added)
        return g


def _is_eligible(g: Graph, x: int) -> bool:
    nb = g.rows[x]
    return bool(nb) and not g.is_clique(nb) and is_connected_mask(g, nb)


def _eligible_unchecked(g: Graph) -> list[int]:
    return [x for x in range(g.n) if _is_eligible(g, x)]


def eligible_vertices(g: Graph) -> list[int]:
    """Vertices whose neighbourhood induces a connected graph that is not a clique."""
    require_claw_free(g)
    return _eligible_unchecked(g)


def is_closed(g: Graph) -> bool:
    return not eligible_vertices(g)


def _missing_in(g: Graph, mask: int) -> list[tuple[int, int]]:
    missing = []
    for u in iter_bits(mask):
        for v in iter_bits(mask & ~g.rows[u] & ~((2 << u) - 1)):
            missing.append((u, v))
    return missing


def complete_at(g: Graph, x: int) -> Graph:
    """Turn the neighbourhood of the eligible vertex ``x`` into a clique."""
    g.check_vertex(x)
    if not _is_eligible(g, x):
        raise PreconditionError(f"vertex {x} is not eligible")
    return g.add_edges(_missing_in(g, g.rows[x]))


def closure(g: Graph, policy: str = "lowest", seed: int | None = None,
            check_steps: bool = False) -> tuple[Graph, ClosureTrace]:
    """Complete at eligible vertices until none remain.

    ``policy`` picks the next eligible vertex: ``"lowest"``, ``"highest"``
    or ``"random"`` (seeded). With ``check_steps`` every intermediate
    graph is re-checked for claws.
    """
    require_claw_free(g)
    rng = random.Random(seed) if policy == "random" else None
    if policy not in ("lowest", "highest", "random"):
        raise ValueError(f"unknown policy {policy!r}")
    cur = g
    steps = []
    while True:
        elig = _eligible_unchecked(cur)
        if not elig:
            break
        if policy == "lowest":
            x = elig[0]
        elif policy == "highest":
            x = elig[-1]
        else:
            x = rng.choice(elig)
        added = tuple(_missing_in(cur, cur.rows[x]))
        cur = cur.add_edges(added)
        steps.append(ClosureStep(x, added))
        if check_steps:
            w = find_claw(cur)
            if w is not None:
                raise AssertionError(f"claw {w} appeared after completing at {x}")
    return cur, ClosureTrace(g, cur, tuple(steps))


def neighborhood_cliques(g: Graph, v: int) -> list[int]:
    """Components of ``g[N(v)]`` as bitmasks, in order of their lowest vertex."""
    rest = g.rows[v]
    parts = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & rest & ~comp
            comp |= frontier
        parts.append(comp)
        rest &= ~comp
    return parts
