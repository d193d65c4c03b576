"""Exhaustive ground-truth oracles.

Nothing here uses the perfect-graph oracles or the branching solver, so these
functions can be used to check them.  Every search has a step budget and
raises :class:`BudgetExceeded` instead of running away.
"""

from __future__ import annotations

import itertools
import os

from .graph import Graph, bits
from .partition import ICPartition

DEFAULT_BUDGET = int(os.environ.get("PARTIZE_BUDGET", 50_000_000))


class BudgetExceeded(RuntimeError):
    pass


def brute_rl_partition(g: Graph, r: int, l: int, budget: int = DEFAULT_BUDGET) -> ICPartition | None:
    """Partition ``g`` into at most ``r`` independent sets and ``l`` cliques, or None.

    Vertices are placed in index order.  A vertex may only open the next unused
    block of a kind, which removes the block-relabelling symmetry.
    """
    n, adj = g.n, g.adj
    ind = [0] * r
    cl = [0] * l
    steps = [0]

    def place(v: int, used_i: int, used_c: int) -> bool:
        if v == n:
            return True
        steps[0] += 1
        if steps[0] > budget:
            raise BudgetExceeded(f"partition search exceeded {budget} steps")
        bit = 1 << v
        for i in range(min(used_i + 1, r)):
            if ind[i] & adj[v] == 0:
                ind[i] |= bit
                if place(v + 1, max(used_i, i + 1), used_c):
                    return True
                ind[i] &= ~bit
        for c in range(min(used_c + 1, l)):
            if cl[c] & ~adj[v] == 0:
                cl[c] |= bit
                if place(v + 1, used_i, max(used_c, c + 1)):
                    return True
                cl[c] &= ~bit
        return False

    if not place(0, 0, 0):
        return None
    return ICPartition.from_blocks(
        [list(bits(b)) for b in ind if b], [list(bits(b)) for b in cl if b]
    )


def brute_min_deletion(g: Graph, r: int, l: int, k: int, budget: int = DEFAULT_BUDGET) -> frozenset[int] | None:
    """Smallest ``S`` with ``|S| <= k`` and ``g - S`` an (r, l)-graph.

    Subsets are tried by size, then lexicographically, so the answer is the
    lexicographically first minimum deletion set.
    """
    tried = 0
    for size in range(min(k, g.n) + 1):
        for subset in itertools.combinations(range(g.n), size):
            tried += 1
            if tried > budget:
                raise BudgetExceeded(f"deletion search exceeded {budget} subsets")
            sub, _ = g.delete(subset)
            if brute_rl_partition(sub, r, l, budget) is not None:
                return frozenset(subset)
    return None


def brute_min_deletion_size(g: Graph, r: int, l: int, k: int) -> int | None:
    s = brute_min_deletion(g, r, l, k)
    return None if s is None else len(s)


def brute_sat(phi, budget: int = 1 << 22) -> dict[int, int] | None:
    """First satisfying assignment of a CNF formula, or None.

    Assignments are enumerated lexicographically with x1 most significant.
    """
    num_vars, clauses = phi.num_vars, phi.clauses
    if 1 << num_vars > budget:
        raise BudgetExceeded(f"{num_vars} variables exceed the enumeration budget")
    for values in itertools.product((0, 1), repeat=num_vars):
        if all(any((values[abs(lit) - 1] == 1) == (lit > 0) for lit in clause) for clause in clauses):
            return {i + 1: values[i] for i in range(num_vars)}
    return None


def _max_clique_mask(adj: tuple[int, ...], mask: int) -> int:
    best = 0

    def grow(clique: int, cand: int) -> None:
        nonlocal best
        if clique.bit_count() + cand.bit_count() <= best.bit_count():
            return
        if cand == 0:
            best = clique
            return
        v = (cand & -cand).bit_length() - 1
        grow(clique | (1 << v), cand & adj[v])
        grow(clique, cand & ~(1 << v))

    grow(0, mask)
    return best


def _colouring(adj: tuple[int, ...], n: int, colours: int) -> list[int] | None:
    classes = [0] * colours

    def place(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(min(used + 1, colours)):
            if classes[c] & adj[v] == 0:
                classes[c] |= 1 << v
                if place(v + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return [c for c in classes if c] if place(0, 0) else None


def brute_omega_alpha_chi(g: Graph) -> dict:
    """Exact clique number, independence number and chromatic number with witnesses."""
    if g.n > 24:
        raise BudgetExceeded("exhaustive omega/alpha/chi limited to 24 vertices")
    full = g.full_mask
    clique = _max_clique_mask(g.adj, full)
    indep = _max_clique_mask(g.complement().adj, full)
    chi, colouring = 0, []
    for c in range(g.n + 1):
        found = _colouring(g.adj, g.n, c)
        if found is not None:
            chi, colouring = c, found
            break
    return {
        "omega": clique.bit_count(),
        "alpha": indep.bit_count(),
        "chi": chi,
        "clique": frozenset(bits(clique)),
        "independent_set": frozenset(bits(indep)),
        "colouring": [frozenset(bits(c)) for c in colouring],
    }


def chromatic_number(g: Graph) -> int:
    return brute_omega_alpha_chi(g)["chi"]


def is_perfect_by_definition(g: Graph) -> bool:
    """chi(H) == omega(H) for every induced subgraph H (small graphs only)."""
    if g.n > 10:
        raise BudgetExceeded("definition check limited to 10 vertices")
    for subset in range(1, 1 << g.n):
        h, _ = g.induced_subgraph(bits(subset))
        vals = brute_omega_alpha_chi(h)
        if vals["chi"] != vals["omega"]:
            return False
    return True
