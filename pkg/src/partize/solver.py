"""Vertex partization on perfect graphs by iterative compression.

``short_vertex_partization`` is the bounded branching search: it carries a
partition ``(Q1, Q2)`` and repairs it by deleting vertices (budget ``k``) or
moving them across the two sides (budget ``rho``).  ``compress`` turns a
deletion set of size ``k + 1`` into one of size ``k``, and ``solve`` grows the
graph one vertex at a time, compressing after each addition.

Vertex sets are bitmasks over the host graph throughout; the search never
re-indexes, so deleting ``v`` just drops its bit.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .graph import Graph, GraphError, bits, mask_of
from .oracles import DEFAULT_CAP, Oracle
from .partition import ICPartition, Solution, restricted_hamming

log = logging.getLogger(__name__)


@dataclass
class RunStats:
    """Instrumentation for one branching search."""

    r: int
    l: int
    k: int
    rho: int
    nodes: int = 0
    depth: int = 0
    pruned: int = 0
    found: bool = False
    hamming: int | None = None

    @property
    def node_bound(self) -> int:
        return (2 * (max(self.r, self.l) + 1)) ** (self.k + self.rho + 1)

    @property
    def within_bounds(self) -> bool:
        return self.nodes <= self.node_bound and self.depth <= self.k + self.rho + 1


def _to_partition(blocks1: list[int], blocks2: list[int]) -> ICPartition:
    return ICPartition.from_blocks([bits(b) for b in blocks1], [bits(b) for b in blocks2])


class _Search:
    """One invocation of the branching algorithm over a fixed host graph.

    With ``memo`` on, a failed state ``(Q1, Q2)`` remembers the budgets it
    failed with; a later visit with budgets no larger in both ``k`` and ``rho``
    is cut.  Failure is monotone in both budgets (the branching clique or
    independent set depends only on the state), so this prunes only subtrees
    that would answer NO, and the first solution found is unchanged.
    """

    def __init__(self, oracle: Oracle, r: int, l: int, stats: RunStats, memo: bool):
        self.oracle = oracle
        self.r = r
        self.l = l
        self.stats = stats
        self.failed: dict[tuple[int, int], list[tuple[int, int]]] | None = {} if memo else None

    def run(self, q1: int, q2: int, k: int, rho: int, level: int = 1):
        # Step 1
        if k < 0 or rho < 0:
            return None
        if self.failed is not None:
            for fk, frho in self.failed.get((q1, q2), ()):
                if fk >= k and frho >= rho:
                    self.stats.pruned += 1
                    return None
        st = self.stats
        st.nodes += 1
        if level > st.depth:
            st.depth = level

        blocks1, clique = self.oracle.colour_or_clique(q1, self.r)
        if blocks1 is not None:
            blocks2, indep = self.oracle.cover_or_independent(q2, self.l)
            if blocks2 is not None:
                # Step 2
                return 0, blocks1, blocks2
            # Step 4: an (l+1)-independent set inside Q2.
            found = self._branch(indep, q1, q2, k, rho, level, to_side1=True)
        else:
            # Step 3: an (r+1)-clique inside Q1.
            found = self._branch(clique, q1, q2, k, rho, level, to_side1=False)
        if found is None and self.failed is not None:
            self.failed.setdefault((q1, q2), []).append((k, rho))
        return found

    def _branch(self, hitter: int, q1: int, q2: int, k: int, rho: int, level: int, to_side1: bool):
        # (a) delete each vertex, then (b) move each vertex to the other side.
        verts = list(bits(hitter))
        for v in verts:
            bit = 1 << v
            res = self.run(q1 & ~bit, q2 & ~bit, k - 1, rho, level + 1)
            if res is not None:
                deleted, b1, b2 = res
                return deleted | bit, b1, b2
        for v in verts:
            bit = 1 << v
            if to_side1:
                res = self.run(q1 | bit, q2 & ~bit, k, rho - 1, level + 1)
            else:
                res = self.run(q1 & ~bit, q2 | bit, k, rho - 1, level + 1)
            if res is not None:
                return res
        return None


def _short(oracle: Oracle, r: int, l: int, k: int, rho: int, q1: int, q2: int,
           memo: bool, runs: list[RunStats] | None) -> Solution | None:
    stats = RunStats(r, l, k, rho)
    res = _Search(oracle, r, l, stats, memo).run(q1, q2, k, rho)
    if runs is not None:
        runs.append(stats)
    if res is None:
        return None
    deleted, blocks1, blocks2 = res
    part = _to_partition(blocks1, blocks2)
    start = ICPartition(frozenset(bits(q1)), frozenset(bits(q2)))
    stats.found = True
    stats.hamming = restricted_hamming(part, start, bits(deleted))
    return Solution(frozenset(bits(deleted)), part, {"nodes": stats.nodes, "depth": stats.depth})


def short_vertex_partization(g: Graph, r: int, l: int, k: int, rho: int, q: ICPartition, *,
                             cap: int = DEFAULT_CAP, memo: bool = False,
                             runs: list[RunStats] | None = None,
                             oracle: Oracle | None = None) -> Solution | None:
    """Find ``S`` with ``|S| <= k`` and an IC-partition of ``g - S`` within
    Hamming distance ``rho`` of ``q`` restricted to ``g - S``.

    ``g`` is trusted to be perfect.  Returns None when no such pair exists.
    """
    if q.block1 & q.block2 or q.vertices != frozenset(range(g.n)):
        raise GraphError("starting partition must partition the vertex set")
    oracle = oracle or Oracle(g, cap)
    return _short(oracle, r, l, k, rho, mask_of(q.block1), mask_of(q.block2), memo, runs)


def compression_budget(r: int, l: int, k: int) -> int:
    """Hamming budget sufficient when the input is an (r + k + 1, l)-graph."""
    return (r + k + 1) * l + r * l


def _compress(oracle: Oracle, r: int, l: int, k: int, s_prev: int, q1: int, q2: int,
              memo: bool, runs: list[RunStats] | None) -> Solution | None:
    rho = compression_budget(r, l, k)
    return _short(oracle, r, l, k, rho, q1 | s_prev, q2, memo, runs)


def compress(g: Graph, r: int, l: int, k: int, s_prev, q: ICPartition, *,
             cap: int = DEFAULT_CAP, memo: bool = False,
             runs: list[RunStats] | None = None) -> Solution | None:
    """Shrink a deletion set of size at most ``k + 1`` to one of size at most ``k``.

    ``q`` must be an IC-partition of ``g - s_prev`` (host indices).  The graph
    is viewed as an (r + k + 1, l)-graph with sides ``(Q1 + s_prev, Q2)``.
    """
    s_prev = frozenset(s_prev)
    if len(s_prev) > k + 1:
        raise GraphError(f"previous deletion set has {len(s_prev)} > k + 1 = {k + 1} vertices")
    if q.block1 & q.block2 or q.vertices | s_prev != frozenset(range(g.n)) or q.vertices & s_prev:
        raise GraphError("q must partition the vertices outside s_prev")
    oracle = Oracle(g, cap)
    q1, q2 = mask_of(q.block1), mask_of(q.block2)
    if oracle.colour_or_clique(q1, r)[0] is None or oracle.cover_or_independent(q2, l)[0] is None:
        raise GraphError(f"q is not an IC-partition realising an ({r}, {l})-graph")
    return _compress(oracle, r, l, k, mask_of(s_prev), q1, q2, memo, runs)


def _trivial(n: int, r: int, l: int) -> Solution:
    keep = min(n, r + l)
    deleted = frozenset(range(keep, n))
    ind = [[v] for v in range(min(keep, r))]
    cl = [[v] for v in range(min(keep, r), keep)]
    return Solution(deleted, ICPartition.from_blocks(ind, cl), {"nodes": 0, "depth": 0})


def solve(g: Graph, r: int, l: int, k: int, *, cap: int = DEFAULT_CAP, memo: bool = False,
          runs: list[RunStats] | None = None) -> Solution | None:
    """Decide whether at most ``k`` deletions turn ``g`` into an (r, l)-graph.

    ``g`` must be perfect and belong to a class the oracles support; neither is
    checked here beyond classification.  Returns a certified solution or None.
    """
    if min(r, l, k) < 0:
        raise ValueError("r, l and k must be non-negative")
    n = g.n
    if n <= r + l + k:
        return _trivial(n, r, l)
    oracle = Oracle(g, cap)
    start = r + l + k + 1
    s_prev = mask_of(range(k + 1))
    q1 = mask_of(range(k + 1, k + 1 + r))
    q2 = mask_of(range(k + 1 + r, start))
    total_nodes = max_depth = 0
    sol = None
    for i in range(start, n + 1):
        if i > start:
            # G_i adds vertex i - 1 to G_{i-1}; it joins the deletion set.
            s_prev = mask_of(sol.deleted) | (1 << (i - 1))
            q1 = mask_of(sol.partition.block1)
            q2 = mask_of(sol.partition.block2)
        sol = _compress(oracle, r, l, k, s_prev, q1, q2, memo, runs)
        if sol is None:
            log.debug("compression failed at i=%d; no solution", i)
            return None
        total_nodes += sol.stats["nodes"]
        max_depth = max(max_depth, sol.stats["depth"])
    return Solution(sol.deleted, sol.partition, {"nodes": total_nodes, "depth": max_depth})


def recognize(g: Graph, r: int, l: int, **kw) -> ICPartition | None:
    """Refined (r, l)-partition of ``g`` or None."""
    sol = solve(g, r, l, 0, **kw)
    return None if sol is None else sol.partition
