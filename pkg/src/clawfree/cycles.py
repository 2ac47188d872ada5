"""Exact Hamilton cycle and longest cycle computation."""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import GraphInputError, UnsupportedSizeError
from .graph import Graph, is_connected_mask, iter_bits

MAX_DP_ORDER = 24
MAX_LONGEST_ORDER = 16


def is_cycle_of(g: Graph, cycle: list[int]) -> bool:
    """``cycle`` is a cycle of ``g`` (distinct vertices, consecutive ones adjacent)."""
    k = len(cycle)
    return (k >= 3 and len(set(cycle)) == k and all(0 <= v < g.n for v in cycle)
            and all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)))


def _rows_array(g: Graph) -> np.ndarray:
    return np.array(g.rows, dtype=np.int64)


def hamilton_cycle_dp(g: Graph) -> list[int] | None:
    """Subset dynamic program over paths from vertex 0 (n <= 24)."""
    if g.n > MAX_DP_ORDER:
        raise UnsupportedSizeError(f"subset DP supports order <= {MAX_DP_ORDER}")
    if g.n < 3:
        return None
    path = _kernels.ham_cycle_dp(_rows_array(g), g.n)
    return [int(v) for v in path] if len(path) else None


def hamilton_cycle_backtrack(g: Graph) -> list[int] | None:
    """Branch and prune from vertex 0, lowest-index neighbour first.

    A partial path ``0 .. head`` is abandoned when some unvisited vertex
    has fewer than two usable neighbours, when the unvisited vertices do
    not induce a connected graph attached to both path ends, or when two
    unvisited vertices are forced onto the same path end. Failed
    (end, unvisited set) states are remembered, so a dead end reached
    through different orderings of the same vertices is searched once.
    """
    n = g.n
    if n < 3:
        return None
    rows = g.rows
    full = (1 << n) - 1
    path = [0]
    dead: set[tuple[int, int]] = set()

    def viable(head: int, unvisited: int) -> tuple[bool, int]:
        ends = 1 | 1 << head
        avail = unvisited | ends
        forced_next = -1
        forced_last = 0
        for w in iter_bits(unvisited):
            usable = rows[w] & avail
            c = usable.bit_count()
            if c < 2:
                return False, -1
            if c == 2 and head != 0:
                if usable >> head & 1:
                    if forced_next >= 0:
                        return False, -1
                    forced_next = w
                if usable & 1:
                    forced_last += 1
                    if forced_last > 1:
                        return False, -1
        if not (rows[head] & unvisited and rows[0] & unvisited):
            return False, -1
        if not is_connected_mask(g, unvisited):
            return False, -1
        return True, forced_next

    def extend(head: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(rows[head] & 1)
        if (head, unvisited) in dead:
            return False
        ok, forced = viable(head, unvisited)
        if not ok:
            dead.add((head, unvisited))
            return False
        cand = (1 << forced) if forced >= 0 else rows[head] & unvisited
        for w in iter_bits(cand):
            path.append(w)
            if extend(w, unvisited & ~(1 << w)):
                return True
            path.pop()
        dead.add((head, unvisited))
        return False

    return list(path) if extend(0, full & ~1) else None


def hamilton_cycle(g: Graph, method: str = "backtrack") -> list[int] | None:
    """A Hamilton cycle as a vertex list starting at 0, or ``None`` (always for n < 3)."""
    if method == "backtrack":
        return hamilton_cycle_backtrack(g)
    if method == "dp":
        return hamilton_cycle_dp(g)
    raise GraphInputError(f"unknown method {method!r}")


def is_hamiltonian(g: Graph) -> bool:
    return hamilton_cycle(g) is not None


def longest_cycle(g: Graph) -> int:
    """Length of a longest cycle of ``g`` (0 if acyclic); exact, n <= 16."""
    if g.n > MAX_LONGEST_ORDER:
        raise UnsupportedSizeError(f"longest cycle supports order <= {MAX_LONGEST_ORDER}")
    if g.n < 3:
        return 0
    return int(_kernels.longest_cycle_dp(_rows_array(g), g.n))


def degree_threshold_check(g: Graph, numerator_shift: int, denominator: int) -> bool:
    """Every vertex satisfies ``denominator * d(v) >= n + numerator_shift``.

    Dirac: ``(0, 2)``; Matthews-Sumner: ``(-2, 3)``.
    """
    if denominator not in (2, 3):
        raise GraphInputError("denominator must be 2 or 3")
    bound = g.n + numerator_shift
    return all(denominator * d >= bound for d in g.degrees())
