"""Compiled subset dynamic programs over adjacency bitmask rows."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _lowest(mask):
    i = 0
    while not (mask >> i) & 1:
        i += 1
    return i


@njit(cache=True)
def ham_cycle_dp(rows, n):
    """Hamilton cycle through vertex 0 by subset DP, or an empty array.

    ``ends[s]`` holds, as a vertex bitmask, every ``v`` such that some path
    from 0 visits exactly ``{0} | s`` and stops at ``v``; subsets ``s`` are
    over vertices ``1..n-1`` stored at bit ``v - 1``.
    """
    empty = np.empty(0, dtype=np.int64)
    if n < 3:
        return empty
    m = n - 1
    ends = np.zeros(1 << m, dtype=np.int64)
    for v in range(1, n):
        if (rows[0] >> v) & 1:
            ends[1 << (v - 1)] = 1 << v
    for s in range(1, 1 << m):
        e = ends[s]
        if e == 0:
            continue
        for w in range(1, n):
            bit = 1 << (w - 1)
            if not (s & bit) and (rows[w] & e):
                ends[s | bit] |= 1 << w
    full = (1 << m) - 1
    last = ends[full] & rows[0]
    if last == 0:
        return empty
    path = np.empty(n, dtype=np.int64)
    v = _lowest(last)
    s = full
    for pos in range(n - 1, 0, -1):
        path[pos] = v
        prev = s & ~(1 << (v - 1))
        if prev == 0:
            break
        v = _lowest(ends[prev] & rows[v])
        s = prev
    path[0] = 0
    return path


@njit(cache=True)
def longest_cycle_dp(rows, n):
    """Length of a longest cycle (0 for forests).

    For each candidate lowest vertex ``s`` run a path DP over subsets of the
    vertices above ``s``.
    """
    best = 0
    for s in range(n - 2):
        m = n - 1 - s
        if m + 1 <= best:
            break
        base = s + 1
        ends = np.zeros(1 << m, dtype=np.int64)
        for v in range(base, n):
            if (rows[s] >> v) & 1:
                ends[1 << (v - base)] = 1 << v
        for t in range(1, 1 << m):
            e = ends[t]
            if e == 0:
                continue
            size = 0
            x = t
            while x:
                x &= x - 1
                size += 1
            if size >= 2 and (e & rows[s]) and size + 1 > best:
                best = size + 1
            for w in range(base, n):
                bit = 1 << (w - base)
                if not (t & bit) and (rows[w] & e):
                    ends[t | bit] |= 1 << w
    return best


@njit(cache=True)
def _ham_exists(rows, n):
    return ham_cycle_dp(rows, n).shape[0] > 0


@njit(cache=True)
def dp_verdicts_all_labeled(n):
    """Hamiltonicity verdict for every labeled graph on ``n`` vertices.

    Index ``code`` reads the graph6 upper-triangle bit vector (column order,
    first pair most significant) as a binary number.
    """
    nbits = n * (n - 1) // 2
    out = np.zeros(1 << nbits, dtype=np.bool_)
    rows = np.zeros(n, dtype=np.int64)
    for code in range(1 << nbits):
        for v in range(n):
            rows[v] = 0
        k = nbits - 1
        for j in range(1, n):
            for i in range(j):
                if (code >> k) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k -= 1
        out[code] = _ham_exists(rows, n)
    return out
