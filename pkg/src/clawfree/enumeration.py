"""Exhaustive small-graph enumeration, labeled and up to isomorphism."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence, Union

from .errors import GraphInputError, UnsupportedSizeError
from .graph import Graph, are_isomorphic, is_connected, is_two_connected, iter_bits, refinement_invariant
from .patterns import is_claw_free

MAX_ENUM_ORDER = 8

Predicate = Callable[[Graph], bool]
FilterSpec = Union[str, Predicate]

NAMED_FILTERS: dict[str, Predicate] = {
    "claw_free": is_claw_free,
    "connected": is_connected,
    "two_connected": is_two_connected,
}


def _resolve(filters: Iterable[FilterSpec] | None) -> tuple[bool, list[Predicate]]:
    """Split off the hereditary claw-free filter (pruned during generation)."""
    claw_free = False
    preds = []
    for f in filters or ():
        if f == "claw_free":
            claw_free = True
        elif isinstance(f, str):
            if f not in NAMED_FILTERS:
                raise GraphInputError(f"unknown filter {f!r}; known: {sorted(NAMED_FILTERS)}")
            preds.append(NAMED_FILTERS[f])
        else:
            preds.append(f)
    return claw_free, preds


def creates_claw(rows: Sequence[int], j: int) -> bool:
    """Whether vertex ``j`` lies on an induced claw of the graph given by ``rows``."""
    nb = rows[j]
    for a in iter_bits(nb):
        rest = nb & ~rows[a] & ~((2 << a) - 1)
        for b in iter_bits(rest):
            if rest & ~rows[b] & ~((2 << b) - 1):
                return True
    for c in iter_bits(nb):
        far = rows[c] & ~nb & ~(1 << j)
        for a in iter_bits(far):
            if far & ~rows[a] & ~(1 << a):
                return True
    return False


def _check_order(n: int) -> None:
    if n < 0:
        raise GraphInputError("order must be non-negative")
    if n > MAX_ENUM_ORDER:
        raise UnsupportedSizeError(
            f"built-in enumeration stops at n = {MAX_ENUM_ORDER}; stream larger graphs as graph6 instead")


def enumerate_labeled(n: int, filters: Iterable[FilterSpec] | None = None) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices passing ``filters``.

    Graphs come in increasing order of their graph6 edge bits read as one
    binary number. ``"claw_free"`` prunes whole subtrees as soon as a claw
    appears; other filters run on complete graphs in the given order.
    """
    _check_order(n)
    claw_free, preds = _resolve(filters)
    rows = [0] * n

    def grow(j: int) -> Iterator[Graph]:
        if j >= n:
            g = Graph._trusted(n, tuple(rows))
            if all(p(g) for p in preds):
                yield g
            return
        for code in range(1 << j):
            nb = 0
            for i in range(j):
                if code >> (j - 1 - i) & 1:
                    nb |= 1 << i
            rows[j] = nb
            for i in iter_bits(nb):
                rows[i] |= 1 << j
            if not (claw_free and creates_claw(rows, j)):
                yield from grow(j + 1)
            for i in iter_bits(nb):
                rows[i] &= ~(1 << j)
        rows[j] = 0

    if n == 0:
        g = Graph.empty(0)
        if all(p(g) for p in preds):
            yield g
        return
    yield from grow(1)


@lru_cache(maxsize=None)
def isomorphism_classes(n: int, claw_free: bool = True) -> tuple[Graph, ...]:
    """One representative per isomorphism class of (claw-free) graphs on ``n`` vertices.

    Built by adding a vertex to every class on ``n - 1`` vertices in all
    possible ways; complete because both properties are hereditary.
    """
    _check_order(n)
    if n <= 1:
        return (Graph.empty(n),)
    reps: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    j = n - 1
    for parent in isomorphism_classes(n - 1, claw_free):
        for nb in range(1 << j):
            rows = list(parent.rows) + [nb]
            for i in iter_bits(nb):
                rows[i] |= 1 << j
            if claw_free and creates_claw(rows, j):
                continue
            g = Graph._trusted(n, tuple(rows))
            bucket = buckets.setdefault(refinement_invariant(g), [])
            if any(are_isomorphic(g, h) for h in bucket):
                continue
            bucket.append(g)
            reps.append(g)
    return tuple(reps)


def enumerate_unlabeled(n: int, filters: Iterable[FilterSpec] | None = None) -> Iterator[Graph]:
    """Representatives of the isomorphism classes on ``n`` vertices passing ``filters``."""
    claw_free, preds = _resolve(filters)
    for g in isomorphism_classes(n, claw_free):
        if all(p(g) for p in preds):
            yield g
