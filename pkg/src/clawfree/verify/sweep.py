"""Run a statement over a corpus of graphs and aggregate the verdicts."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator, Sequence

from ..enumeration import MAX_ENUM_ORDER, enumerate_labeled, enumerate_unlabeled
from ..errors import GraphInputError, UnsupportedSizeError
from ..formats import encode_graph6, parse_graph6, read_graph6_lines
from ..graph import Graph
from .statements import COUNTEREXAMPLE, CONFIRMED, VACUOUS, check_statement, get_statement

log = logging.getLogger(__name__)

DEFAULT_FILTERS = ("claw_free", "two_connected")
CHUNK = 64


@dataclass
class Corpus:
    description: str
    graphs: Iterable[Graph] = field(repr=False)
    config: dict = field(default_factory=dict)

    def tokens(self) -> Iterator[str]:
        for g in self.graphs:
            yield encode_graph6(g)


def builtin_corpus(n_max: int, filters: Sequence[str] = DEFAULT_FILTERS, mode: str = "labeled",
                   n_min: int = 1) -> Corpus:
    """All graphs with ``n_min <= n <= n_max`` passing ``filters``.

    ``mode="iso"`` yields one graph per isomorphism class, ``"labeled"``
    every labeled graph.
    """
    if n_max > MAX_ENUM_ORDER:
        raise UnsupportedSizeError(f"built-in corpus stops at n = {MAX_ENUM_ORDER}; use a graph6 stream")
    if mode not in ("iso", "labeled"):
        raise GraphInputError(f"unknown corpus mode {mode!r}")
    gen = enumerate_unlabeled if mode == "iso" else enumerate_labeled

    def graphs() -> Iterator[Graph]:
        for n in range(n_min, n_max + 1):
            yield from gen(n, filters)

    desc = f"{mode}:n={n_min}..{n_max}:{'+'.join(filters) or 'all'}"
    return Corpus(desc, graphs(), {"n_max": n_max, "n_min": n_min, "mode": mode, "filters": list(filters)})


def stream_corpus(lines: Iterable[str], name: str = "stream") -> Corpus:
    """Graphs read from graph6 lines; malformed lines raise with their line number."""
    return Corpus(f"stream:{name}", read_graph6_lines(lines), {"stream": name})


def graphs_corpus(graphs: Iterable[Graph], name: str = "graphs") -> Corpus:
    return Corpus(name, graphs, {})


@dataclass
class Report:
    statement: str
    corpus: str
    counts: dict[str, int]
    counterexamples: list[str]
    config: dict

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        return {"statement": self.statement, "corpus": self.corpus, "counts": dict(self.counts),
                "counterexamples": list(self.counterexamples), "config": dict(self.config)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def summary(self) -> str:
        c = self.counts
        return (f"{self.statement} on {self.corpus}: {self.total} graphs, "
                f"{c[VACUOUS]} vacuous, {c[CONFIRMED]} confirmed, {c[COUNTEREXAMPLE]} counterexamples")


def _check_chunk(args: tuple[str, list[str]]) -> list[tuple[str, str]]:
    statement_id, tokens = args
    s = get_statement(statement_id)
    return [(t, check_statement(parse_graph6(t), s).status) for t in tokens]


def _chunks(tokens: Iterator[str], size: int) -> Iterator[list[str]]:
    while True:
        chunk = list(islice(tokens, size))
        if not chunk:
            return
        yield chunk


def sweep(corpus: Corpus, statement: str, workers: int = 1, seed: int | None = None) -> Report:
    """Evaluate ``statement`` on every corpus graph.

    The report depends only on the corpus, statement and seed; the worker
    count changes scheduling, never the result.
    """
    if workers < 1:
        raise GraphInputError("workers must be >= 1")
    s = get_statement(statement)
    counts = {VACUOUS: 0, CONFIRMED: 0, COUNTEREXAMPLE: 0}
    bad: list[str] = []
    jobs = ((s.id, chunk) for chunk in _chunks(corpus.tokens(), CHUNK))
    if workers == 1:
        results: Iterable[list[tuple[str, str]]] = map(_check_chunk, jobs)
        for chunk in results:
            _merge(chunk, counts, bad)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_check_chunk, jobs):
                _merge(chunk, counts, bad)
    config = dict(corpus.config)
    config["seed"] = seed
    report = Report(s.id, corpus.description, counts, sorted(bad), config)
    if counts[COUNTEREXAMPLE] and s.open_question:
        log.warning("open statement %s: %d counterexamples found", s.id, counts[COUNTEREXAMPLE])
    return report


def _merge(chunk: list[tuple[str, str]], counts: dict[str, int], bad: list[str]) -> None:
    for token, status in chunk:
        counts[status] += 1
        if status == COUNTEREXAMPLE:
            bad.append(token)
