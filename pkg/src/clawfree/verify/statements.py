"""Registry of testable hamiltonicity statements and per-graph verdicts.

Statement ids::

    dirac                       min degree >= n/2, n >= 3
    matthews_sumner             2-connected, claw-free, min degree >= (n-2)/3
    fujisawa_yamashita          2-connected, claw-free, Phi(Z1, -2)
    broersma_conjecture         2-connected, claw-free, Phi(N, -2)       (open)
    bedrossian_pair:S           2-connected, claw-free, S-free
    problem_1_5:H               2-connected, claw-free, Phi(H, -2), H in P6/N/W  (open)
    thm_main:H                  2-connected, claw-free, Phi(H, 3)
    thm_iff_list[:H]            as thm_main, H restricted to the eight listed graphs;
                                without H: Phi(H, 3) for at least one listed H
    phi:H:k                     2-connected, claw-free, Phi(H, k)

Every conclusion is "hamiltonian".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from ..cycles import degree_threshold_check, is_hamiltonian
from ..errors import GraphInputError
from ..formats import encode_graph6
from ..graph import Graph, is_two_connected
from ..patterns import Pattern, is_claw_free, is_free, make_pattern, phi_holds

BEDROSSIAN_S = ("P4", "P5", "P6", "C3", "Z1", "Z2", "B", "N", "W")
PROBLEM_H = ("P6", "N", "W")
IFF_LIST = ("P3", "P4", "P5", "P6", "Z1", "B", "N", "W")
OPEN_STATEMENTS = ("broersma_conjecture", "problem_1_5")

VACUOUS = "vacuous"
CONFIRMED = "confirmed"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class Statement:
    id: str
    hypothesis: Callable[[Graph], bool] = field(repr=False, compare=False)
    conclusion: Callable[[Graph], bool] = field(repr=False, compare=False)
    params: tuple = ()
    open_question: bool = False


@dataclass(frozen=True)
class Verdict:
    graph6: str
    hypothesis_holds: bool
    conclusion_holds: bool | None
    status: str


def _structural(g: Graph) -> bool:
    return is_two_connected(g) and is_claw_free(g)


def _phi_hyp(p: Pattern, k: int) -> Callable[[Graph], bool]:
    return lambda g: _structural(g) and phi_holds(g, p, k).holds


def _pattern(name: str) -> Pattern:
    return make_pattern(name)


def _canon(name: str) -> str:
    return _pattern(name).name


@lru_cache(maxsize=None)
def get_statement(statement_id: str) -> Statement:
    """Look up (or build, for parameterised families) a registered statement."""
    head, _, rest = statement_id.partition(":")
    ham = is_hamiltonian
    if head == "dirac" and not rest:
        return Statement("dirac", lambda g: g.n >= 3 and degree_threshold_check(g, 0, 2), ham)
    if head == "matthews_sumner" and not rest:
        return Statement("matthews_sumner",
                         lambda g: _structural(g) and degree_threshold_check(g, -2, 3), ham)
    if head == "fujisawa_yamashita" and not rest:
        return Statement("fujisawa_yamashita", _phi_hyp(_pattern("Z1"), -2), ham, ("Z1", -2))
    if head == "broersma_conjecture" and not rest:
        return Statement("broersma_conjecture", _phi_hyp(_pattern("N"), -2), ham, ("N", -2),
                         open_question=True)
    try:
        if head == "bedrossian_pair" and rest:
            name = _canon(rest)
            if name not in BEDROSSIAN_S:
                raise GraphInputError(f"bedrossian_pair takes S in {BEDROSSIAN_S}")
            p = _pattern(name)
            return Statement(f"bedrossian_pair:{name}", lambda g: _structural(g) and is_free(g, p),
                             ham, (name,))
        if head == "problem_1_5" and rest:
            name = _canon(rest)
            if name not in PROBLEM_H:
                raise GraphInputError(f"problem_1_5 takes H in {PROBLEM_H}")
            return Statement(f"problem_1_5:{name}", _phi_hyp(_pattern(name), -2), ham, (name, -2),
                             open_question=True)
        if head == "thm_main" and rest:
            name = _canon(rest)
            return Statement(f"thm_main:{name}", _phi_hyp(_pattern(name), 3), ham, (name, 3))
        if head == "thm_iff_list":
            if rest:
                name = _canon(rest)
                if name not in IFF_LIST:
                    raise GraphInputError(f"thm_iff_list takes H in {IFF_LIST}")
                return Statement(f"thm_iff_list:{name}", _phi_hyp(_pattern(name), 3), ham, (name, 3))
            pats = [_pattern(n) for n in IFF_LIST]
            return Statement("thm_iff_list",
                             lambda g: _structural(g) and any(phi_holds(g, p, 3).holds for p in pats),
                             ham, (IFF_LIST, 3))
        if head == "phi" and rest:
            name, _, k = rest.partition(":")
            name = _canon(name)
            k = int(k)
            return Statement(f"phi:{name}:{k}", _phi_hyp(_pattern(name), k), ham, (name, k))
    except ValueError as exc:
        raise GraphInputError(f"bad statement id {statement_id!r}: {exc}") from None
    raise GraphInputError(f"unknown statement id {statement_id!r}")


def registered_ids() -> list[str]:
    ids = ["dirac", "matthews_sumner", "fujisawa_yamashita", "broersma_conjecture", "thm_iff_list"]
    ids += [f"bedrossian_pair:{s}" for s in BEDROSSIAN_S]
    ids += [f"problem_1_5:{h}" for h in PROBLEM_H]
    ids += [f"thm_main:{h}" for h in IFF_LIST]
    ids += [f"thm_iff_list:{h}" for h in IFF_LIST]
    return ids


def check_statement(g: Graph, s: Statement | str) -> Verdict:
    if isinstance(s, str):
        s = get_statement(s)
    token = encode_graph6(g)
    if not s.hypothesis(g):
        return Verdict(token, False, None, VACUOUS)
    holds = bool(s.conclusion(g))
    return Verdict(token, True, holds, CONFIRMED if holds else COUNTEREXAMPLE)
