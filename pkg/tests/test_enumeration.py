"""Counts and determinism of the exhaustive enumerations."""

from itertools import combinations, permutations

import pytest

from corank.enumeration import (EnumerationRangeError, all_trees,
                                enumerate_connected_graphs, enumerate_digraphs,
                                enumerate_graphs, tree_code)
from corank.graphs import Graph, canonical_form, is_connected, is_tree

KNOWN_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
KNOWN_TREES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47,
               10: 106, 11: 235, 12: 551}


def test_connected_graph_counts():
    graphs = enumerate_connected_graphs(6)
    assert len(graphs) == 143
    by_n = {}
    for g in graphs:
        by_n[g.n] = by_n.get(g.n, 0) + 1
        assert is_connected(g)
    assert by_n == KNOWN_CONNECTED


def test_small_count_oracle_brute_force():
    # n = 4: dedup all 2^6 masks by exhaustive permutation orbits
    pairs = list(combinations(range(4), 2))
    classes = set()
    for mask in range(64):
        edges = frozenset(pairs[k] for k in range(6) if mask >> k & 1)
        orbit = []
        for perm in permutations(range(4)):
            orbit.append(frozenset(tuple(sorted((perm[u], perm[v])))
                                   for u, v in edges))
        classes.add(min(tuple(sorted(o)) for o in orbit))
    connected_classes = [c for c in classes if is_connected(Graph(4, list(c)))]
    assert len(connected_classes) == 6
    assert len([g for g in enumerate_connected_graphs(4) if g.n == 4]) == 6
    assert len(enumerate_connected_graphs(4)) == 10
    assert len(enumerate_connected_graphs(1)) == 1


def test_enumeration_is_isomorphism_free_and_ordered():
    graphs = enumerate_connected_graphs(6)
    keys = [canonical_form(g).key for g in graphs]
    assert len(set(keys)) == len(keys)
    by_n_keys = [(g.n, k) for g, k in zip(graphs, keys)]
    assert by_n_keys == sorted(by_n_keys)


def test_seven_vertex_tier():
    graphs = enumerate_graphs(7)
    assert len([g for g in graphs if g.n == 7]) == 1044
    connected = enumerate_connected_graphs(7)
    assert len([g for g in connected if g.n == 7]) == 853
    with pytest.raises(EnumerationRangeError):
        enumerate_connected_graphs(8)


def test_digraph_counts():
    assert len(enumerate_digraphs(1)) == 1
    assert len(enumerate_digraphs(2)) == 4
    by_n = {}
    for d in enumerate_digraphs(4):
        by_n[d.n] = by_n.get(d.n, 0) + 1
    assert by_n == {1: 1, 2: 3, 3: 16, 4: 218}
    with pytest.raises(EnumerationRangeError):
        enumerate_digraphs(5)


def test_digraph_count_matches_orbit_brute_force():
    # 64 labeled digraphs on 3 vertices modulo S_3
    arcs_all = [(i, j) for i in range(3) for j in range(3) if i != j]
    classes = set()
    for mask in range(64):
        arcs = frozenset(arcs_all[k] for k in range(6) if mask >> k & 1)
        orbit = min(tuple(sorted((p[u], p[v]) for u, v in arcs))
                    for p in permutations(range(3)))
        classes.add(orbit)
    assert len(classes) == 16


def test_tree_counts_and_validity():
    for n, expect in KNOWN_TREES.items():
        trees = all_trees(n)
        assert len(trees) == expect
        codes = {tree_code(t) for t in trees}
        assert len(codes) == expect
        assert all(is_tree(t) for t in trees)
    with pytest.raises(EnumerationRangeError):
        all_trees(13)


def test_tree_code_is_isomorphism_invariant():
    import random
    from corank.graphs import relabel
    rng = random.Random(41)
    for t in all_trees(8):
        perm = list(range(8))
        rng.shuffle(perm)
        assert tree_code(relabel(t, perm)) == tree_code(t)
