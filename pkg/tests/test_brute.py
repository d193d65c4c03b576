import pytest
from hypothesis import given, settings, strategies as st

from partize.brute import (BudgetExceeded, brute_min_deletion, brute_omega_alpha_chi,
                           brute_rl_partition, chromatic_number, is_perfect_by_definition)
from partize.graph import Graph, is_clique, is_independent, is_perfect
from partize.partition import Solution, verify_solution

from test_graph import graphs

TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])


def test_rl_partition_examples():
    assert brute_rl_partition(Graph.cycle(5), 2, 0) is None
    part = brute_rl_partition(Graph.cycle(5), 2, 1)
    assert verify_solution(Graph.cycle(5), 2, 1, 0, Solution(frozenset(), part))[0]
    empty = brute_rl_partition(Graph.empty(0), 0, 0)
    assert empty is not None and empty.vertices == frozenset()


def test_min_deletion_examples():
    assert brute_min_deletion(Graph.cycle(5), 2, 0, 1) == frozenset({0})
    assert brute_min_deletion(Graph.complete(3), 1, 0, 1) is None
    assert brute_min_deletion(Graph.complete(3), 1, 0, 2) == frozenset({0, 1})
    assert brute_min_deletion(TWO_K2, 1, 1, 0) is None


def test_omega_alpha_chi_examples():
    def triple(g):
        v = brute_omega_alpha_chi(g)
        return v["omega"], v["alpha"], v["chi"]

    assert triple(Graph.cycle(5)) == (2, 2, 3)
    assert triple(Graph.complete(4)) == (4, 1, 4)
    assert triple(Graph.cycle(4)) == (2, 2, 2)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        brute_rl_partition(Graph.cycle(9), 2, 0, budget=3)
    with pytest.raises(BudgetExceeded):
        is_perfect_by_definition(Graph.empty(11))


def test_perfect_by_definition():
    assert is_perfect_by_definition(Graph.cycle(6))
    assert not is_perfect_by_definition(Graph.cycle(5))
    assert not is_perfect_by_definition(Graph.cycle(7).complement())


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_witnesses_are_valid(g):
    v = brute_omega_alpha_chi(g)
    assert is_clique(g, v["clique"]) and len(v["clique"]) == v["omega"]
    assert is_independent(g, v["independent_set"]) and len(v["independent_set"]) == v["alpha"]
    assert len(v["colouring"]) == v["chi"]
    assert all(is_independent(g, c) for c in v["colouring"])


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), st.integers(0, 3))
def test_partition_matches_chromatic_numbers(g, r):
    assert (brute_rl_partition(g, r, 0) is not None) == (chromatic_number(g) <= r)
    assert (brute_rl_partition(g, 0, r) is not None) == (chromatic_number(g.complement()) <= r)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8).filter(is_perfect))
def test_perfect_graphs_satisfy_duality(g):
    v = brute_omega_alpha_chi(g)
    assert v["chi"] == v["omega"]
    assert chromatic_number(g.complement()) == v["alpha"]


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_deterministic(g, r, l, k):
    assert brute_min_deletion(g, r, l, k) == brute_min_deletion(g, r, l, k)
    assert brute_rl_partition(g, r, l) == brute_rl_partition(g, r, l)
