from __future__ import annotations

import pytest

from clawfree.errors import GraphInputError
from clawfree.families import fig2
from clawfree.graph import Graph
from clawfree.verify.statements import (CONFIRMED, COUNTEREXAMPLE, VACUOUS, check_statement,
                                        get_statement, registered_ids)


def test_registry_resolves_every_listed_id():
    for sid in registered_ids():
        assert get_statement(sid).id == sid
    assert get_statement("thm_main:bull").id == "thm_main:B"
    assert get_statement("phi:Z2:-2").params == ("Z2", -2)
    assert get_statement("problem_1_5:N").open_question
    assert get_statement("broersma_conjecture").open_question
    assert not get_statement("thm_main:N").open_question


@pytest.mark.parametrize("bad", ["nope", "bedrossian_pair:Z3", "problem_1_5:P5", "thm_iff_list:Z2",
                                 "phi:N:x", "thm_main:Q", "dirac:1"])
def test_unknown_ids(bad):
    with pytest.raises(GraphInputError):
        get_statement(bad)


def test_examples():
    assert check_statement(Graph.complete(4), "dirac").status == CONFIRMED
    f6 = fig2(6).graph
    v = check_statement(f6, "thm_main:Z2")
    assert v.status == COUNTEREXAMPLE and v.hypothesis_holds and v.conclusion_holds is False
    assert check_statement(f6, "thm_main:N").status != COUNTEREXAMPLE
    assert check_statement(f6, "phi:Z2:-2").status == COUNTEREXAMPLE
    assert check_statement(f6, "matthews_sumner").status == VACUOUS


def test_vacuous_on_structural_failure():
    # a claw is not 2-connected nor claw-free, so nothing binds
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    for sid in ("thm_main:P3", "fujisawa_yamashita", "bedrossian_pair:P4"):
        v = check_statement(g, sid)
        assert v.status == VACUOUS and v.conclusion_holds is None


def test_status_law_on_small_graphs():
    from clawfree.enumeration import enumerate_unlabeled

    for n in range(3, 7):
        for g in enumerate_unlabeled(n, ["claw_free"]):
            for sid in ("thm_iff_list", "bedrossian_pair:P6", "dirac"):
                v = check_statement(g, sid)
                assert (v.status == COUNTEREXAMPLE) == (v.hypothesis_holds and not v.conclusion_holds)
                assert (v.status == VACUOUS) == (not v.hypothesis_holds)
