"""Seeded instance generators.  Every generator takes an explicit ``random.Random``."""

from __future__ import annotations

import random

from .graph import Graph, bits
from .sat import CnfFormula


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_bipartite(n1: int, n2: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, n1 + v) for u in range(n1) for v in range(n2) if rng.random() < p]
    return Graph.from_edges(n1 + n2, edges)


def random_tree(t: int, rng: random.Random) -> list[list[int]]:
    nbrs: list[list[int]] = [[] for _ in range(t)]
    for v in range(1, t):
        u = rng.randrange(v)
        nbrs[u].append(v)
        nbrs[v].append(u)
    return nbrs


def random_chordal(n: int, rng: random.Random, tree_size: int | None = None, max_subtree: int = 3) -> Graph:
    """Intersection graph of random subtrees of a random tree (hence chordal)."""
    t = tree_size or max(1, n)
    tree = random_tree(t, rng)
    subtrees = []
    for _ in range(n):
        root = rng.randrange(t)
        nodes = {root}
        frontier = [root]
        size = rng.randint(1, max_subtree)
        while frontier and len(nodes) < size:
            x = frontier.pop(rng.randrange(len(frontier)))
            for y in tree[x]:
                if y not in nodes and len(nodes) < size:
                    nodes.add(y)
                    frontier.append(y)
        subtrees.append(nodes)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if subtrees[u] & subtrees[v]]
    return Graph.from_edges(n, edges)


def _grow_clique(rows: list[int], required: int, allowed: int, p: float, rng: random.Random) -> int:
    """Random clique containing ``required`` (itself a clique) within ``allowed``."""
    clique = required
    cand = allowed & ~required
    for v in bits(required):
        cand &= rows[v]
    order = list(bits(cand))
    rng.shuffle(order)
    for v in order:
        if cand >> v & 1 and rng.random() < p:
            clique |= 1 << v
            cand &= rows[v]
    return clique


def planted(n: int, r: int, l: int, k: int, rng: random.Random, p: float = 0.5) -> tuple[Graph, frozenset[int]]:
    """Chordal graph that becomes an (r, l)-graph after deleting ``k`` planted vertices.

    ``n - k`` vertices are spread over r independent and l clique parts; each
    new vertex attaches to a random clique compatible with its part, which
    keeps every vertex simplicial on arrival.  The ``k`` noise vertices attach
    to unconstrained random cliques.  Labels are shuffled at the end.
    Returns the graph and the planted deletion set.
    """
    if r + l == 0 and n > k:
        raise ValueError("an (0, 0)-graph is empty, so n must not exceed k")
    if k > n:
        raise ValueError("k must not exceed n")
    rows: list[int] = []
    ind_parts = [0] * r
    cl_parts = [0] * l
    core = n - k
    for x in range(core):
        part = rng.randrange(r + l)
        everyone = (1 << x) - 1
        if part < r:
            nb = _grow_clique(rows, 0, everyone & ~ind_parts[part], p, rng)
            ind_parts[part] |= 1 << x
        else:
            j = part - r
            nb = _grow_clique(rows, cl_parts[j], everyone, p, rng)
            cl_parts[j] |= 1 << x
        for v in bits(nb):
            rows[v] |= 1 << x
        rows.append(nb)
    for x in range(core, n):
        nb = _grow_clique(rows, 0, (1 << x) - 1, p, rng)
        for v in bits(nb):
            rows[v] |= 1 << x
        rows.append(nb)
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph(n, tuple(rows))
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return Graph.from_edges(n, edges), frozenset(perm[x] for x in range(core, n))


def random_cnf(num_vars: int, num_clauses: int, rng: random.Random,
               min_width: int = 1, max_width: int = 3) -> CnfFormula:
    """Random CNF without tautologies: each clause uses distinct variables."""
    clauses = []
    for _ in range(num_clauses):
        width = rng.randint(min_width, min(max_width, num_vars))
        chosen = rng.sample(range(1, num_vars + 1), width)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in sorted(chosen)))
    return CnfFormula(num_vars, tuple(clauses))
