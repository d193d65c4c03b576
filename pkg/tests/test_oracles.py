import random

import pytest
from hypothesis import given, settings, strategies as st

from partize.brute import brute_omega_alpha_chi, chromatic_number
from partize.generators import random_bipartite, random_chordal, random_graph
from partize.graph import Graph, is_clique, is_independent, is_perfect
from partize.oracles import (Oracle, OracleError, UnsupportedGraph, classify, color_or_clique,
                             cover_or_independent, lexbfs_peo, max_clique, max_independent_set)

from test_graph import graphs

DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])


def is_peo(g, order):
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in range(g.n) if g.has_edge(u, v) and pos[u] > pos[v]]
        if not is_clique(g, later):
            return False
    return sorted(order) == list(range(g.n))


def test_classify_examples():
    assert classify(Graph.cycle(4)) == "bipartite"
    assert classify(DIAMOND) == "chordal"
    assert classify(Graph.cycle(5)) == "generic-small"
    assert classify(Graph.cycle(6).complement()) == "co-bipartite"


def test_classify_rejects_large_generic():
    g = Graph.cycle(5).disjoint_union(Graph.cycle(5))
    assert classify(g, cap=10) == "generic-small"
    with pytest.raises(UnsupportedGraph):
        classify(g, cap=9)


def test_peo_examples():
    order = lexbfs_peo(Graph.complete(3))
    assert sorted(order) == [0, 1, 2]
    assert lexbfs_peo(Graph.cycle(4)) is None
    tree = Graph.from_edges(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
    order = lexbfs_peo(tree)
    assert is_peo(tree, order) and tree.degree(order[0]) == 1


def test_color_or_clique_examples():
    assert set(color_or_clique(Graph.cycle(4), 2).partition) == {frozenset({0, 2}), frozenset({1, 3})}
    assert color_or_clique(Graph.complete(4), 3).certificate == frozenset(range(4))
    assert color_or_clique(Graph.empty(5), 1).partition == (frozenset(range(5)),)


def test_cover_or_independent_examples():
    assert set(cover_or_independent(TWO_K2, 2).partition) == {frozenset({0, 1}), frozenset({2, 3})}
    assert cover_or_independent(Graph.empty(3), 2).certificate == frozenset(range(3))
    assert cover_or_independent(Graph.complete(5), 1).partition == (frozenset(range(5)),)


def test_max_examples():
    assert len(max_clique(DIAMOND)) == 3
    assert len(max_independent_set(Graph.cycle(4))) == 2
    assert len(max_independent_set(Graph.empty(6))) == 6
    assert len(max_clique(Graph.empty(6))) == 1


def test_generic_oracle_fails_loudly_on_imperfect_input():
    # C5 needs 3 colours but has no triangle
    with pytest.raises(OracleError):
        color_or_clique(Graph.cycle(5), 2)


def test_negative_l_rejected():
    with pytest.raises(ValueError):
        color_or_clique(Graph.cycle(4), -1)


def check_colour(g, l, res):
    if res.is_partition:
        assert len(res.partition) <= l
        assert frozenset().union(*res.partition) == frozenset(range(g.n)) if g.n else True
        assert sum(len(b) for b in res.partition) == g.n
        assert all(is_independent(g, b) for b in res.partition)
    else:
        assert len(res.certificate) == l + 1 and is_clique(g, res.certificate)


perfect_graphs = graphs(max_n=9).filter(is_perfect)


@settings(max_examples=200, deadline=None)
@given(perfect_graphs, st.integers(0, 5))
def test_colour_oracle_sound_and_complete(g, l):
    res = color_or_clique(g, l)
    check_colour(g, l, res)
    assert res.is_partition == (chromatic_number(g) <= l)


@settings(max_examples=200, deadline=None)
@given(perfect_graphs, st.integers(0, 5))
def test_cover_oracle_sound_and_complete(g, l):
    res = cover_or_independent(g, l)
    h = g.complement()
    check_colour(h, l, res)
    assert res.is_partition == (chromatic_number(h) <= l)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8).filter(is_perfect), st.integers(0, 4))
def test_cover_is_dual_of_colour(g, l):
    a = cover_or_independent(g, l)
    b = color_or_clique(g.complement(), l)
    assert a.is_partition == b.is_partition


@settings(max_examples=150, deadline=None)
@given(perfect_graphs)
def test_max_clique_and_mis_are_exact(g):
    ref = brute_omega_alpha_chi(g)
    c, s = max_clique(g), max_independent_set(g)
    assert is_clique(g, c) and is_independent(g, s)
    assert len(c) == ref["omega"] and len(s) == ref["alpha"]


@pytest.mark.parametrize("seed", range(30))
def test_structured_classes_are_hereditary(seed):
    rng = random.Random(seed)
    g = random_chordal(9, rng) if seed % 2 else random_bipartite(4, 5, 0.5, rng)
    kind = classify(g)
    assert kind in ("bipartite", "chordal")
    for _ in range(20):
        sub, _ = g.induced_subgraph([v for v in range(g.n) if rng.random() < 0.6])
        assert classify(sub) in (("bipartite",) if kind == "bipartite" else ("bipartite", "chordal"))


@pytest.mark.parametrize("seed", range(40))
def test_oracle_on_masks_matches_fresh_classification(seed):
    rng = random.Random(seed)
    g = random_chordal(10, rng) if seed % 2 else random_graph(8, 0.5, rng)
    while not is_perfect(g):
        g = random_graph(8, 0.5, rng)
    oracle = Oracle(g)
    for _ in range(10):
        mask = rng.getrandbits(g.n)
        sub, _ = g.induced_subgraph([v for v in range(g.n) if mask >> v & 1])
        for l in range(4):
            blocks, _ = oracle.colour_or_clique(mask, l)
            assert (blocks is not None) == color_or_clique(sub, l).is_partition
