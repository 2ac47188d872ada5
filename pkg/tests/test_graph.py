from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from clawfree.errors import GraphInputError, UnsupportedSizeError
from clawfree.families import brousek, fig2
from clawfree.graph import (Graph, are_isomorphic, cut_vertices, distance, find_isomorphism,
                            induced_subgraph, is_connected, is_two_connected, refinement_invariant)

from conftest import graphs, star, to_nx


def test_constructor_rejects_asymmetric_and_loops():
    with pytest.raises(GraphInputError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphInputError):
        Graph(1, (1,))
    with pytest.raises(GraphInputError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphInputError):
        Graph.from_edges(3, [(0, 3)])


def test_order_cap():
    Graph.empty(64)
    with pytest.raises(GraphInputError):
        Graph.empty(65)


@given(graphs())
def test_symmetric_irreflexive(g):
    for v in range(g.n):
        assert not g.has_edge(v, v)
        for u in g.neighbors(v):
            assert g.has_edge(u, v)
    assert sum(g.degrees()) == 2 * g.size


def test_induced_subgraph_examples():
    assert induced_subgraph(Graph.complete(4), [0, 2, 3]) == Graph.complete(3)
    assert induced_subgraph(Graph.cycle(5), [1, 2, 3]) == Graph.path(3)
    assert induced_subgraph(star(3), [0, 2]) == Graph.complete(2)
    with pytest.raises(GraphInputError):
        induced_subgraph(Graph.cycle(5), [0, 5])


def test_distance_examples():
    assert distance(Graph.path(4), 0, 3) == 3
    assert distance(Graph.cycle(5), 2, 2) == 0
    assert distance(Graph.empty(2), 0, 1) is None
    with pytest.raises(GraphInputError):
        distance(Graph.path(3), 0, 7)


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=8))
def test_distance_against_networkx(g):
    lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    for x in range(g.n):
        for y in range(g.n):
            d = distance(g, x, y)
            assert d == lengths[x].get(y)
            assert (d == 1) == g.has_edge(x, y)
            for z in range(g.n):
                dz, dzy = distance(g, x, z), distance(g, z, y)
                if dz is not None and dzy is not None:
                    assert d is not None and d <= dz + dzy


def test_two_connected_examples():
    assert is_two_connected(Graph.complete(3))
    assert not is_two_connected(Graph.path(4))
    assert cut_vertices(Graph.path(4)) == [1, 2]
    assert is_two_connected(fig2(6).graph)
    assert not is_two_connected(Graph.complete(2))


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_two_connected_against_networkx(g):
    expected = g.n >= 3 and nx.is_biconnected(to_nx(g))
    assert is_two_connected(g) == expected
    assert is_connected(g) == (g.n == 0 or nx.is_connected(to_nx(g)))
    if is_two_connected(g):
        assert min(g.degrees()) >= 2 and is_connected(g)


def test_isomorphism_examples():
    c5 = Graph.cycle(5)
    assert are_isomorphic(c5, c5.relabel([3, 0, 4, 1, 2]))
    assert not are_isomorphic(star(3), Graph.path(4))
    assert are_isomorphic(fig2(3).graph, brousek("3,3,3").graph)


def test_fig2_3_matches_hand_built_adjacency():
    # two triangles {0,1,2}, {3,4,5} joined by the paths 0-6-3, 1-7-4, 2-8-5
    hand = Graph.from_edges(9, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
                                (0, 6), (6, 3), (1, 7), (7, 4), (2, 8), (8, 5)])
    assert are_isomorphic(fig2(3).graph, hand)
    assert are_isomorphic(brousek("3,3,3").graph, hand)


def test_isomorphism_size_cap():
    with pytest.raises(UnsupportedSizeError):
        are_isomorphic(Graph.empty(17), Graph.empty(17))


@settings(max_examples=100)
@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphism_against_networkx(g, h):
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_isomorphism_under_random_relabeling():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 10)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        perm = list(range(n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        iso = find_isomorphism(g, h)
        assert iso is not None
        assert all(h.has_edge(iso[u], iso[v]) for u, v in g.edges())
        assert refinement_invariant(g) == refinement_invariant(h)


def test_isomorphism_is_an_equivalence_on_a_corpus():
    rng = random.Random(8)
    corpus = []
    for _ in range(25):
        n = rng.randint(4, 6)
        corpus.append(Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                           if rng.random() < 0.5]))
    rel = [[are_isomorphic(a, b) for b in corpus] for a in corpus]
    for i in range(len(corpus)):
        assert rel[i][i]
        for j in range(len(corpus)):
            assert rel[i][j] == rel[j][i]
            for k in range(len(corpus)):
                if rel[i][j] and rel[j][k]:
                    assert rel[i][k]
