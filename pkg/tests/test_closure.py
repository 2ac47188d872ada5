from __future__ import annotations

import pytest
from hypothesis import given, settings

from clawfree.closure import (closure, complete_at, eligible_vertices, is_closed,
                              neighborhood_cliques)
from clawfree.cycles import longest_cycle
from clawfree.errors import ClawError, PreconditionError
from clawfree.families import brousek
from clawfree.graph import Graph, is_connected_mask
from clawfree.patterns import is_claw_free, is_free, make_pattern

from conftest import claw_free_graphs, diamond, star


def direct_eligible(g):
    # straight from the definition: N(x) connected and not complete
    out = []
    for x in range(g.n):
        nb = g.rows[x]
        if nb and is_connected_mask(g, nb) and not g.is_clique(nb):
            out.append(x)
    return out


def test_eligible_examples():
    assert eligible_vertices(diamond()) == [0, 1]
    assert eligible_vertices(Graph.cycle(5)) == []
    assert eligible_vertices(make_pattern("B").graph) == []


def test_complete_at_examples():
    k4 = complete_at(diamond(), 0)
    assert k4 == Graph.complete(4)
    with pytest.raises(PreconditionError):
        complete_at(k4, 0)


def test_closure_examples():
    final, trace = closure(Graph.cycle(5))
    assert final == Graph.cycle(5) and trace.steps == ()
    final, trace = closure(diamond())
    assert final == Graph.complete(4) and len(trace.steps) == 1
    b = brousek("3,3,3").graph
    assert closure(b)[0] == b


def test_is_closed_examples():
    assert is_closed(Graph.cycle(5))
    assert not is_closed(diamond())
    assert is_closed(Graph.complete(6))


def test_claw_input_rejected_with_witness():
    for op in (eligible_vertices, is_closed, closure):
        with pytest.raises(ClawError) as info:
            op(star(3))
        assert info.value.witness == (0, 1, 2, 3)


def test_unknown_policy():
    with pytest.raises(ValueError):
        closure(diamond(), policy="middle")


@settings(max_examples=150, deadline=None)
@given(claw_free_graphs(max_n=11))
def test_closure_laws(g):
    assert eligible_vertices(g) == direct_eligible(g)
    final, trace = closure(g, check_steps=True)
    assert trace.replay() == final
    for policy in ("highest", "random"):
        assert closure(g, policy=policy, seed=7)[0] == final
    assert is_claw_free(final) and is_closed(final)
    assert closure(final)[0] == final
    # each step completes an eligible vertex of the current graph
    cur = g
    for step in trace.steps:
        assert step.vertex in direct_eligible(cur)
        cur = complete_at(cur, step.vertex)
        assert is_claw_free(cur)
    for v in range(g.n):
        assert final.degree(v) >= g.degree(v)
        assert len(neighborhood_cliques(final, v)) <= 2
        for part in neighborhood_cliques(final, v):
            assert final.is_clique(part)
    if g.n <= 10:
        assert longest_cycle(final) == longest_cycle(g)
    if is_free(g, make_pattern("N")):
        assert is_free(final, make_pattern("N"))
