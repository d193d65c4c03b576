"""(r, l)-split graphs, their minimal forbidden induced subgraphs, and the
reduction of split deletion to d-Hitting Set.

A graph is (r, l)-split if its vertices split into ``V1`` with clique number at
most ``r`` and ``V2`` with independence number at most ``l``.  On perfect graphs
this coincides with being an (r, l)-graph, so deleting a hitting set of all
induced forbidden copies solves vertex partization for fixed ``(r, l)``.
"""

from __future__ import annotations

import itertools
import logging
import os
import warnings
from dataclasses import dataclass
from math import comb

import numpy as np

from .canon import canonical_labeling
from .graph import Graph, bits
from .hitting import SetSystem, branch_hitting_set, sunflower_kernel

log = logging.getLogger(__name__)

SPLIT_CAP = 20
FAMILY_CAP = 8
EMBED_BUDGET = int(os.environ.get("PARTIZE_BUDGET", 5_000_000))
FAMILY_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    pass


class IncompleteFamilyWarning(UserWarning):
    """The enumerated family may miss obstructions larger than its cap."""


class IncompleteFamilyError(ValueError):
    pass


def _clique_numbers(adj: tuple[int, ...], n: int) -> list[int]:
    """Clique number of ``G[mask]`` for every mask, by the lowest-vertex recurrence."""
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        without = table[mask ^ low]
        with_v = 1 + table[mask & adj[v]]
        table[mask] = without if without > with_v else with_v
    return table


def is_rl_split(g: Graph, r: int, l: int, cap: int = SPLIT_CAP) -> tuple[frozenset[int], frozenset[int]] | None:
    """An (r, l)-split partition ``(V1, V2)`` or None.

    ``V2`` is chosen as the first mask in increasing integer order that works.
    """
    if g.n > cap:
        raise BudgetExceeded(f"split recognition is exhaustive; {g.n} vertices exceed cap {cap}")
    full = g.full_mask
    omega = _clique_numbers(g.adj, g.n)
    alpha = _clique_numbers(g.complement().adj, g.n)
    for v2 in range(1 << g.n):
        if alpha[v2] <= l and omega[full ^ v2] <= r:
            return frozenset(bits(full ^ v2)), frozenset(bits(v2))
    return None


# Largest obstruction size where the family is known in full.
def known_obstruction_bound(r: int, l: int) -> int | None:
    if l == 0:
        return r + 1  # K_{r+1}
    if r == 0:
        return l + 1  # l+1 isolated vertices
    if (r, l) == (1, 1):
        return 5  # 2K2, C4, C5
    return None


@dataclass(frozen=True)
class ForbiddenFamily:
    members: tuple[Graph, ...]
    r: int
    l: int
    cap: int

    @property
    def d(self) -> int:
        return max((h.n for h in self.members), default=0)

    @property
    def complete(self) -> bool:
        bound = known_obstruction_bound(self.r, self.l)
        return bound is not None and self.cap >= bound

    def to_dimacs(self) -> str:
        """Members as consecutive DIMACS blocks separated by comment lines."""
        chunks = []
        for i, h in enumerate(self.members):
            chunks.append(f"c member {i}\n" + h.to_dimacs())
        return "".join(chunks)


def enumerate_forbidden_family(r: int, l: int, cap: int = FAMILY_CAP,
                               budget: int = FAMILY_BUDGET) -> ForbiddenFamily:
    """All minimal non-(r, l)-split graphs on at most ``cap`` vertices, up to isomorphism.

    Level by level: every (r, l)-split graph on n vertices, and every minimal
    obstruction on n vertices, is a one-vertex extension of an (r, l)-split
    graph on n - 1 vertices, because the class is hereditary.
    """
    if cap > 10:
        raise BudgetExceeded(f"family enumeration is exhaustive; cap {cap} > 10 is not supported")
    split_level = {canonical_labeling(Graph.empty(0))[0]: Graph.empty(0)}
    members: list[Graph] = []
    work = 0
    for n in range(1, cap + 1):
        nxt: dict[int, Graph] = {}
        candidates: dict[int, Graph] = {}
        for base in split_level.values():
            for nbrs in range(1 << (n - 1)):
                work += 1
                if work > budget:
                    raise BudgetExceeded(f"family enumeration exceeded {budget} candidates")
                rows = [row | ((nbrs >> v & 1) << (n - 1)) for v, row in enumerate(base.adj)]
                h = Graph(n, tuple(rows) + (nbrs,))
                code, order = canonical_labeling(h)
                if code not in candidates:
                    candidates[code] = _relabel(h, order)
        for code, h in candidates.items():
            if is_rl_split(h, r, l) is not None:
                nxt[code] = h
            elif all(canonical_labeling(h.delete([v])[0])[0] in split_level for v in range(n)):
                members.append(h)
        log.debug("n=%d: %d split graphs, %d obstructions so far", n, len(nxt), len(members))
        split_level = nxt
        if not split_level:
            break
    return ForbiddenFamily(tuple(members), r, l, cap)


def _relabel(h: Graph, order: list[int]) -> Graph:
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(h.n, [(pos[u], pos[v]) for u, v in h.edges()])


def _pair_bits(s: int) -> list[tuple[int, int]]:
    # Upper-triangle order, most significant first, matching canon._code.
    return [(i, j) for i in range(s) for j in range(i + 1, s)]


def _local_graph(code: int, s: int) -> Graph:
    pairs = _pair_bits(s)
    total = len(pairs)
    edges = [pairs[t] for t in range(total) if code >> (total - 1 - t) & 1]
    return Graph.from_edges(s, edges)


def extract_hitting_instance(g: Graph, fam: ForbiddenFamily, budget: int = EMBED_BUDGET) -> SetSystem:
    """One set per vertex subset of ``g`` inducing a copy of a family member."""
    by_size: dict[int, dict[int, int]] = {}
    member_order: dict[int, list[int]] = {}
    for idx, h in enumerate(fam.members):
        code, order = canonical_labeling(h)
        by_size.setdefault(h.n, {})[code] = idx
        member_order[idx] = order
    total = sum(comb(g.n, s) for s in by_size)
    if total > budget:
        raise BudgetExceeded(f"{total} candidate subsets exceed the embedding budget {budget}")
    adj = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1
    sets: list[frozenset[int]] = []
    prov: list[tuple[int, dict[int, int]]] = []
    for s in sorted(by_size):
        if s > g.n:
            continue
        if s == 0:
            continue
        combos = np.array(list(itertools.combinations(range(g.n), s)), dtype=np.int64).reshape(-1, s)
        codes = np.zeros(len(combos), dtype=np.int64)
        for i, j in _pair_bits(s):
            codes = (codes << 1) | adj[combos[:, i], combos[:, j]]
        uniq, inverse = np.unique(codes, return_inverse=True)
        hit = {}
        for ui, local in enumerate(uniq.tolist()):
            lg = _local_graph(local, s)
            code, order = canonical_labeling(lg)
            idx = by_size[s].get(code)
            if idx is not None:
                hit[ui] = (idx, order)
        if not hit:
            continue
        for row, ui in zip(combos.tolist(), inverse.ravel().tolist()):
            found = hit.get(ui)
            if found is None:
                continue
            idx, order = found
            # canonical position p: member vertex member_order[idx][p], subset vertex row[order[p]]
            emb = {member_order[idx][p]: row[order[p]] for p in range(s)}
            sets.append(frozenset(row))
            prov.append((idx, emb))
    return SetSystem(g.n, tuple(sets), fam.d, tuple(prov))


def default_family(r: int, l: int, cap: int | None = None, strict: bool = False) -> ForbiddenFamily:
    if cap is None:
        bound = known_obstruction_bound(r, l)
        cap = bound if bound is not None and bound <= FAMILY_CAP else FAMILY_CAP
    fam = enumerate_forbidden_family(r, l, cap)
    check_complete(fam, strict)
    return fam


def check_complete(fam: ForbiddenFamily, strict: bool = False) -> None:
    if fam.complete:
        return
    msg = (f"forbidden family for ({fam.r}, {fam.l}) enumerated only up to {fam.cap} vertices; "
           "larger obstructions may exist")
    if strict:
        raise IncompleteFamilyError(msg)
    warnings.warn(msg, IncompleteFamilyWarning, stacklevel=3)


def solve_via_kernel(g: Graph, r: int, l: int, k: int, fam: ForbiddenFamily | None = None,
                     strict: bool = False, stats: dict | None = None) -> frozenset[int] | None:
    """Deletion set of size at most ``k`` leaving an (r, l)-split graph, or None.

    Extracts the hitting-set instance, kernelises it and branches on the kernel.
    On perfect inputs the result is also an (r, l)-vertex deletion set.
    """
    if fam is None:
        fam = default_family(r, l, strict=strict)
    else:
        check_complete(fam, strict)
    system = extract_hitting_instance(g, fam)
    kern = sunflower_kernel(system, k, max(fam.d, 1))
    if stats is not None:
        stats.update(sets=len(system), kernel_sets=len(kern.system), forced=len(kern.forced))
    if kern.verdict is False:
        return None
    rest = branch_hitting_set(kern.system, kern.k, stats)
    if rest is None:
        return None
    return kern.forced | rest
