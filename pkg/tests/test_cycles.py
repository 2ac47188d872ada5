from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from clawfree.cycles import (degree_threshold_check, hamilton_cycle, hamilton_cycle_backtrack,
                             hamilton_cycle_dp, is_cycle_of, is_hamiltonian, longest_cycle)
from clawfree.errors import GraphInputError, UnsupportedSizeError
from clawfree.families import brousek, fig2
from clawfree.graph import Graph

from conftest import graphs, to_nx


def nx_longest_cycle(g) -> int:
    best = 0
    for c in nx.simple_cycles(to_nx(g)):
        if len(c) >= 3:
            best = max(best, len(c))
    return best


def test_hamilton_examples():
    cyc = hamilton_cycle(Graph.complete(4))
    assert len(cyc) == 4 and is_cycle_of(Graph.complete(4), cyc)
    assert hamilton_cycle(fig2(6).graph) is None
    assert hamilton_cycle(fig2(6).graph, "dp") is None
    assert hamilton_cycle(brousek("3,3,3").graph) is None
    assert hamilton_cycle(Graph.complete(2)) is None
    assert hamilton_cycle(Graph.empty(0)) is None
    with pytest.raises(GraphInputError):
        hamilton_cycle(Graph.complete(3), "guess")


def test_longest_cycle_examples():
    assert longest_cycle(Graph.path(7)) == 0
    assert longest_cycle(Graph.cycle(5)) == 5
    lg = brousek("3,3,3")
    assert longest_cycle(lg.graph) == 8
    listed = [lg[x] for x in ("a1", "c1^1", "b1", "b2", "b3", "c3^1", "a3", "a2")]
    assert is_cycle_of(lg.graph, listed)
    with pytest.raises(UnsupportedSizeError):
        longest_cycle(Graph.empty(17))


def test_degree_threshold_examples():
    assert degree_threshold_check(Graph.complete(4), 0, 2)
    assert not degree_threshold_check(Graph.cycle(6), 0, 2)
    assert not degree_threshold_check(fig2(6).graph, -2, 3)
    with pytest.raises(GraphInputError):
        degree_threshold_check(Graph.complete(4), 0, 5)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_solvers_agree_and_witnesses_validate(g):
    bt = hamilton_cycle_backtrack(g)
    dp = hamilton_cycle_dp(g)
    assert (bt is None) == (dp is None)
    for cyc in (bt, dp):
        if cyc is not None:
            assert is_cycle_of(g, cyc) and len(cyc) == g.n and cyc[0] == 0
    lc = longest_cycle(g)
    assert lc == nx_longest_cycle(g)
    assert (bt is not None) == (g.n >= 3 and lc == g.n)


def test_solvers_agree_on_random_order_14():
    rng = random.Random(21)
    for _ in range(300):
        n = rng.randint(10, 14)
        p = rng.uniform(0.15, 0.5)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        assert is_hamiltonian(g) == (hamilton_cycle_dp(g) is not None)


def test_is_cycle_of_rejects_bad_cycles():
    g = Graph.cycle(5)
    assert not is_cycle_of(g, [0, 1, 2])
    assert not is_cycle_of(g, [0, 1, 2, 3, 3])
    assert not is_cycle_of(g, [0, 2, 1, 3, 4])
