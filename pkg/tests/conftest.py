from __future__ import annotations

import itertools
import random
import sys

import networkx as nx
import pytest
from hypothesis import strategies as st

from clawfree.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


def diamond() -> Graph:
    # degree-3 vertices 0 and 1, degree-2 vertices 2 and 3
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def star(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def brute_induced(g: Graph, p: Graph) -> set[tuple[int, ...]]:
    """All injective maps from p into g that preserve adjacency and non-adjacency."""
    found = set()
    for image in itertools.permutations(range(g.n), p.n):
        if all(g.has_edge(image[u], image[v]) == p.has_edge(u, v)
               for u in range(p.n) for v in range(u + 1, p.n)):
            found.add(image)
    return found


def all_labeled(n: int):
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def claw_free_graphs(draw, max_n: int = 10) -> Graph:
    from clawfree.verify.sampling import random_claw_free

    seed = draw(st.integers(0, 2**32 - 1))
    return random_claw_free(random.Random(seed), n_max=max_n)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
