"""Theorem registry, corpus sweeps and structural witness searches."""

from .hefty import Claim1Report, HeftyVerdict, claim1_sweep, hefty_triple_check, is_hefty
from .statements import (COUNTEREXAMPLE, CONFIRMED, VACUOUS, Statement, Verdict, check_statement,
                         get_statement, registered_ids)
from .sweep import Corpus, Report, builtin_corpus, graphs_corpus, stream_corpus, sweep
from .witness import brousek_witness, triangles, verify_witness

__all__ = [
    "COUNTEREXAMPLE", "CONFIRMED", "VACUOUS", "Claim1Report", "Corpus", "HeftyVerdict", "Report",
    "Statement", "Verdict", "brousek_witness", "builtin_corpus", "check_statement", "claim1_sweep",
    "get_statement", "graphs_corpus", "hefty_triple_check", "is_hefty", "registered_ids",
    "stream_corpus", "sweep", "triangles", "verify_witness",
]
