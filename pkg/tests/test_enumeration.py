from __future__ import annotations

import itertools
import math
from collections import Counter

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from clawfree.enumeration import enumerate_labeled, enumerate_unlabeled, isomorphism_classes
from clawfree.errors import UnsupportedSizeError
from clawfree.formats import encode_graph6
from clawfree.graph import are_isomorphic, is_two_connected

from conftest import all_labeled, from_nx, to_nx


def brute_has_claw(g) -> bool:
    for c in range(g.n):
        for a, b, d in itertools.combinations(g.neighbors(c), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return True
    return False


def automorphisms(g) -> int:
    h = to_nx(g)
    return sum(1 for _ in GraphMatcher(h, h).isomorphisms_iter())


def test_small_counts():
    assert sum(1 for _ in enumerate_labeled(3)) == 8
    assert sum(1 for _ in enumerate_labeled(4, ["claw_free"])) == 60
    two = list(enumerate_labeled(3, ["two_connected"]))
    assert len(two) == 1 and two[0].size == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_labeled_claw_free_against_brute_force(n):
    expected = sorted(encode_graph6(g) for g in all_labeled(n) if not brute_has_claw(g))
    got = [encode_graph6(g) for g in enumerate_labeled(n, ["claw_free"])]
    assert sorted(got) == expected
    assert len(set(got)) == len(got)


def test_size_cap():
    with pytest.raises(UnsupportedSizeError, match="graph6"):
        next(enumerate_labeled(9))


def test_custom_filter_callable():
    got = list(enumerate_labeled(4, [lambda g: g.size == 6]))
    assert len(got) == 1


def test_iso_classes_match_graph_atlas():
    # the atlas lists every graph on at most 7 vertices once up to isomorphism
    atlas = Counter()
    atlas_two = Counter()
    for h in nx.graph_atlas_g()[1:]:
        g = from_nx(h)
        if not brute_has_claw(g):
            atlas[g.n] += 1
            atlas_two[g.n] += is_two_connected(g)
    for n in range(1, 8):
        assert len(isomorphism_classes(n)) == atlas[n]
        assert sum(1 for _ in enumerate_unlabeled(n, ["claw_free", "two_connected"])) == atlas_two[n]


def test_iso_classes_pairwise_non_isomorphic():
    classes = isomorphism_classes(6)
    for a, b in itertools.combinations(classes, 2):
        assert not are_isomorphic(a, b)


@pytest.mark.parametrize("n", range(3, 8))
def test_orbit_sum_recovers_labeled_count(n):
    # every labeled graph is a relabeling of exactly one class representative
    reps = list(enumerate_unlabeled(n, ["claw_free", "two_connected"]))
    orbit_total = sum(math.factorial(n) // automorphisms(g) for g in reps)
    assert orbit_total == sum(1 for _ in enumerate_labeled(n, ["claw_free", "two_connected"]))


def test_order_8_counts():
    assert len(isomorphism_classes(8)) == 1285
    assert sum(1 for _ in enumerate_unlabeled(8, ["claw_free", "two_connected"])) == 619


def test_order_8_classes_against_networkx_dedupe():
    # independent route: extend every 7-vertex class by one vertex, dedupe with networkx
    buckets: dict[str, list] = {}
    for base in isomorphism_classes(7):
        for nb in range(1 << 7):
            h = to_nx(base)
            h.add_node(7)
            h.add_edges_from((7, u) for u in range(7) if nb >> u & 1)
            g = from_nx(h)
            if brute_has_claw(g):
                continue
            key = nx.weisfeiler_lehman_graph_hash(h, iterations=4)
            bucket = buckets.setdefault(key, [])
            if not any(nx.is_isomorphic(h, other) for other in bucket):
                bucket.append(h)
    reps = [from_nx(h) for bucket in buckets.values() for h in bucket]
    assert len(reps) == len(isomorphism_classes(8))
    assert sum(is_two_connected(g) for g in reps) == 619
