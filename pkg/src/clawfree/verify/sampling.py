"""Seeded random corpora of claw-free graphs."""

from __future__ import annotations

import math
import random

from ..cycles import hamilton_cycle
from ..families import BrousekSpec, brousek, line_graph
from ..graph import Graph, iter_bits
from ..patterns import is_claw_free, is_free, net
from .witness import triangles


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_claw_free(rng: random.Random, n_max: int = 12, n_min: int = 3) -> Graph:
    """Half the time the line graph of a random triangle-free graph, otherwise a
    random graph of a uniformly drawn order, resampled until claw-free."""
    if rng.random() < 0.5:
        # aim at m edges so the line graph order is spread over the range
        m = rng.randint(max(n_min, 2), n_max)
        lo = max(3, math.ceil(2 * math.sqrt(m)))
        while True:
            hn = rng.randint(lo, m + 1)
            h = random_graph(rng, hn, min(1.0, m / (hn * (hn - 1) / 2)))
            if n_min <= h.size <= n_max and not triangles(h):
                return line_graph(h).graph
    n = rng.randint(n_min, n_max)
    while True:
        g = random_graph(rng, n, rng.uniform(0.2, 0.85))
        if is_claw_free(g):
            return g


def claw_free_corpus(count: int, seed: int, n_max: int = 12, n_min: int = 3) -> list[Graph]:
    rng = random.Random(seed)
    return [random_claw_free(rng, n_max, n_min) for _ in range(count)]


def net_free_claw_free_corpus(count: int, seed: int, n_max: int = 12) -> list[Graph]:
    rng = random.Random(seed)
    p = net()
    out = []
    while len(out) < count:
        g = random_claw_free(rng, n_max)
        if is_free(g, p):
            out.append(g)
    return out


def random_spec(rng: random.Random, max_order: int) -> BrousekSpec:
    while True:
        x = tuple(rng.choice(["T", 3, 3, 4, 5]) for _ in range(3))
        spec = BrousekSpec(x)
        if spec.order <= max_order:
            return spec


def grow_nonhamiltonian(rng: random.Random, max_order: int = 12, steps: int = 12) -> Graph:
    """Random non-hamiltonian 2-connected claw-free graph grown from a family member.

    Each step adds an edge or a vertex joined to a clique, kept only if the
    graph stays claw-free and non-hamiltonian (2-connectivity is preserved
    by both moves).
    """
    g = brousek(random_spec(rng, max_order)).graph
    for _ in range(steps):
        if rng.random() < 0.5 and g.n < max_order:
            # new vertex on a random edge's common clique
            u, v = rng.choice(g.edges())
            nb = 1 << u | 1 << v
            for w in iter_bits(g.rows[u] & g.rows[v]):
                if rng.random() < 0.5 and g.is_clique(nb | 1 << w):
                    nb |= 1 << w
            rows = list(g.rows) + [nb]
            for w in iter_bits(nb):
                rows[w] |= 1 << g.n
            cand = Graph(g.n + 1, tuple(rows))
        else:
            missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
            if not missing:
                break
            cand = g.add_edges([rng.choice(missing)])
        if is_claw_free(cand) and hamilton_cycle(cand) is None:
            g = cand
    return g
