import random

import pytest
from hypothesis import given, settings, strategies as st

from partize.brute import brute_min_deletion
from partize.generators import planted, random_bipartite, random_chordal
from partize.graph import Graph, GraphError
from partize.partition import (ICPartition, Solution, hamming, label_vector, restricted_hamming,
                               verify_solution)
from partize.solver import (compress, compression_budget, recognize, short_vertex_partization,
                            solve)

from test_graph import graphs
from partize.graph import is_perfect

TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])
ALL = frozenset(range(4))


def whole(n, side1=True):
    v = frozenset(range(n))
    return ICPartition(v, frozenset()) if side1 else ICPartition(frozenset(), v)


# label vectors and Hamming distance

def test_hamming_examples():
    assert hamming((0, 0, 1, 1), (0, 1, 0, 1)) == 2
    a = (0, 1, 1, 0, 1, 0, 0)
    assert hamming(a, a) == 0
    assert hamming(a, tuple(1 - x for x in a)) == 7


def test_hamming_length_mismatch():
    with pytest.raises(ValueError):
        hamming((0, 1), (0,))


def test_label_vector_orientation():
    p = ICPartition(frozenset({0, 2}), frozenset({1}))
    assert label_vector(p, [0, 1, 2]) == (0, 1, 0)


@given(st.lists(st.integers(0, 1), max_size=12), st.data())
def test_hamming_is_a_metric(a, data):
    b = data.draw(st.lists(st.integers(0, 1), min_size=len(a), max_size=len(a)))
    c = data.draw(st.lists(st.integers(0, 1), min_size=len(a), max_size=len(a)))
    assert hamming(a, b) == hamming(b, a)
    assert hamming(a, c) <= hamming(a, b) + hamming(b, c)


# short_vertex_partization

def test_short_triangle_vertex_cover():
    runs = []
    sol = short_vertex_partization(Graph.complete(3), 1, 0, 2, 0, whole(3), runs=runs)
    assert len(sol.deleted) == 2
    assert len(sol.partition.independent_blocks) == 1
    assert runs[0].within_bounds


def test_short_c4_bipartition():
    sol = short_vertex_partization(Graph.cycle(4), 2, 0, 0, 0, whole(4))
    assert sol.deleted == frozenset()
    assert set(sol.partition.independent_blocks) == {frozenset({0, 2}), frozenset({1, 3})}


@pytest.mark.parametrize("rho", [-1, 0, 3])
def test_short_negative_k_is_no(rho):
    runs = []
    assert short_vertex_partization(Graph.cycle(4), 2, 0, -1, rho, whole(4), runs=runs) is None
    assert runs[0].nodes == 0


def test_short_rejects_non_partition():
    with pytest.raises(GraphError):
        short_vertex_partization(Graph.cycle(4), 2, 0, 0, 0, ICPartition(frozenset({0}), frozenset({0})))


# compress

def test_compression_budget():
    assert compression_budget(3, 0, 2) == 0
    assert compression_budget(1, 1, 0) == 3


def test_compress_bipartite_target_uses_zero_budget():
    runs = []
    q = ICPartition(frozenset({1, 3}), frozenset())
    sol = compress(Graph.cycle(4), 2, 0, 1, {0, 2}, q, runs=runs)
    assert sol is not None and runs[0].rho == 0


def test_compress_k5_split():
    runs = []
    q = ICPartition(frozenset({1}), frozenset({2, 3, 4}))
    sol = compress(Graph.complete(5), 1, 1, 0, {0}, q, runs=runs)
    assert sol is not None and sol.deleted == frozenset()
    assert runs[0].rho == 3 and runs[0].hamming <= 3


def test_compress_2k2():
    q = ICPartition(frozenset({0}), frozenset({2}))
    sol = compress(TWO_K2, 1, 1, 1, {1, 3}, q)
    assert sol is not None and len(sol.deleted) == 1


def test_compress_contract_violations():
    with pytest.raises(GraphError):
        compress(TWO_K2, 1, 1, 0, {0, 1}, ICPartition(frozenset({2}), frozenset({3})))
    with pytest.raises(GraphError):
        # {0, 1} is an edge, so q is not an independent side
        compress(TWO_K2, 1, 0, 1, {2, 3}, ICPartition(frozenset({0, 1}), frozenset()))


# solve / recognize / verify

def test_solve_examples():
    sol = solve(Graph.cycle(4), 2, 0, 0)
    assert sol.deleted == frozenset() and verify_solution(Graph.cycle(4), 2, 0, 0, sol)[0]
    assert solve(TWO_K2, 1, 1, 0) is None
    sol = solve(TWO_K2, 1, 1, 1)
    assert len(sol.deleted) == 1


def test_solve_base_case():
    sol = solve(Graph.complete(4), 1, 1, 3)
    assert sol.deleted == frozenset({2, 3})
    assert sol.partition.independent_blocks == (frozenset({0}),)
    assert sol.partition.clique_blocks == (frozenset({1}),)


def test_solve_rejects_negative():
    with pytest.raises(ValueError):
        solve(TWO_K2, -1, 1, 0)


def test_recognize_examples():
    part = recognize(Graph.path(3), 1, 1)
    assert part is not None and verify_solution(Graph.path(3), 1, 1, 0, Solution(frozenset(), part))[0]
    assert recognize(Graph.cycle(4), 1, 1) is None
    assert recognize(Graph.empty(3), 0, 0) is None
    assert recognize(Graph.empty(0), 0, 0) is not None


def test_verify_examples():
    g = Graph.cycle(4)
    good = Solution(frozenset(), ICPartition.from_blocks([[0, 2], [1, 3]], []))
    assert verify_solution(g, 2, 0, 0, good) == (True, "ok")
    broken = Solution(frozenset(), ICPartition.from_blocks([[0, 1, 2], [3]], []))
    assert not verify_solution(g, 2, 0, 0, broken)[0]
    big = Solution(frozenset({0}), ICPartition.from_blocks([[2], [1, 3]], []))
    assert not verify_solution(g, 2, 0, 0, big)[0]


def test_verify_missing_vertex_raises():
    bad = Solution(frozenset({9}), ICPartition.from_blocks([[0, 2], [1, 3]], []))
    with pytest.raises(GraphError):
        verify_solution(Graph.cycle(4), 2, 0, 1, bad)


def test_solution_json_round_trip():
    sol = solve(Graph.cycle(6), 2, 1, 0)
    data = sol.to_json()
    assert set(data) == {"deleted", "independent_blocks", "clique_blocks", "stats"}
    back = Solution.from_json(data)
    assert back.deleted == sol.deleted and back.partition == sol.partition


# properties

def random_supported(rng, n):
    kind = rng.randrange(3)
    if kind == 0:
        n1 = rng.randint(0, n)
        return random_bipartite(n1, n - n1, rng.random(), rng)
    if kind == 1:
        return random_chordal(n, rng)
    return random_chordal(n, rng).complement()


def check_sound(g, r, l, k, **kw):
    runs = []
    sol = solve(g, r, l, k, runs=runs, **kw)
    if sol is not None:
        assert verify_solution(g, r, l, k, sol) == (True, "ok")
    for run in runs:
        assert run.within_bounds
        if run.found:
            assert run.hamming <= run.rho


@pytest.mark.parametrize("seed", range(40))
def test_soundness_small(seed):
    rng = random.Random(seed)
    g = random_supported(rng, rng.randint(8, 14))
    check_sound(g, rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2))


# With r, l, k up to 2 the compression budget reaches 14 moves, so the plain
# search can take minutes on 30 vertices; the failure cache keeps it quick.
@pytest.mark.parametrize("seed", range(100, 160))
def test_soundness_up_to_30_vertices(seed):
    rng = random.Random(seed)
    g = random_supported(rng, rng.randint(10, 30))
    check_sound(g, rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2), memo=True)


@pytest.mark.parametrize("seed", range(20))
def test_planted_instances_are_yes(seed):
    rng = random.Random(seed)
    r, l, k = rng.randint(1, 2), rng.randint(1, 2), rng.randint(0, 3)
    g, s = planted(rng.randint(8, 22), r, l, k, rng)
    sol = solve(g, r, l, k)
    assert sol is not None and verify_solution(g, r, l, k, sol)[0]


perfect_small = graphs(max_n=8).filter(is_perfect)


@settings(max_examples=60, deadline=None)
@given(perfect_small, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_monotone_in_parameters(g, r, l, k):
    if solve(g, r, l, k) is not None:
        assert solve(g, r, l, k + 1) is not None
        assert solve(g, r + 1, l, k) is not None
        assert solve(g, r, l + 1, k) is not None


@settings(max_examples=60, deadline=None)
@given(perfect_small, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_memo_does_not_change_answer(g, r, l, k):
    plain, cached = solve(g, r, l, k), solve(g, r, l, k, memo=True)
    assert (plain is None) == (cached is None)
    if plain is not None:
        assert plain.deleted == cached.deleted and plain.partition == cached.partition


@settings(max_examples=40, deadline=None)
@given(perfect_small, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_matches_brute_force(g, r, l, k):
    assert (solve(g, r, l, k) is None) == (brute_min_deletion(g, r, l, k) is None)


@pytest.mark.parametrize("seed", range(10))
def test_restricted_hamming_reported(seed):
    rng = random.Random(seed)
    g = random_chordal(12, rng)
    runs = []
    solve(g, 1, 1, 2, runs=runs)
    for run in runs:
        if run.found:
            assert 0 <= run.hamming <= run.rho


def test_restricted_hamming_ignores_deleted():
    p = ICPartition(frozenset({0}), frozenset({1, 2}))
    q = ICPartition(frozenset({0, 1}), frozenset({2}))
    assert restricted_hamming(p, q) == 1
    assert restricted_hamming(p, q, deleted=[1]) == 0
