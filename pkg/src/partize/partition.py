"""IC-partitions, label vectors and solution certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, GraphError, is_clique, is_independent, mask_of


@dataclass(frozen=True)
class ICPartition:
    """Two-block partition; ``block1`` is the independent side, ``block2`` the clique side.

    ``independent_blocks`` / ``clique_blocks`` are the optional refinement into
    independent sets of ``block1`` and cliques of ``block2``.
    """

    block1: frozenset[int]
    block2: frozenset[int]
    independent_blocks: tuple[frozenset[int], ...] | None = None
    clique_blocks: tuple[frozenset[int], ...] | None = None

    @classmethod
    def from_blocks(cls, independent: Iterable[Iterable[int]], cliques: Iterable[Iterable[int]]) -> "ICPartition":
        ind = tuple(frozenset(b) for b in independent)
        cl = tuple(frozenset(b) for b in cliques)
        return cls(frozenset().union(*ind), frozenset().union(*cl), ind, cl)

    @property
    def refined(self) -> bool:
        return self.independent_blocks is not None and self.clique_blocks is not None

    @property
    def vertices(self) -> frozenset[int]:
        return self.block1 | self.block2


def label_vector(part: ICPartition, vertices: Sequence[int]) -> tuple[int, ...]:
    """Bit per vertex of ``vertices`` (ascending): 0 on the independent side, 1 otherwise."""
    return tuple(0 if v in part.block1 else 1 for v in vertices)


def hamming(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"label vectors differ in length: {len(a)} != {len(b)}")
    return sum(x != y for x, y in zip(a, b))


def restricted_hamming(p: ICPartition, q: ICPartition, deleted: Iterable[int] = ()) -> int:
    """Hamming distance of the label vectors of ``p`` and ``q`` on ``V(p)`` minus ``deleted``."""
    gone = set(deleted)
    verts = sorted(v for v in p.vertices if v not in gone)
    return hamming(label_vector(p, verts), label_vector(q, verts))


@dataclass(frozen=True)
class Solution:
    deleted: frozenset[int]
    partition: ICPartition
    stats: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        part = self.partition
        return {
            "deleted": sorted(self.deleted),
            "independent_blocks": [sorted(b) for b in part.independent_blocks or ()],
            "clique_blocks": [sorted(b) for b in part.clique_blocks or ()],
            "stats": {"nodes": int(self.stats.get("nodes", 0)), "depth": int(self.stats.get("depth", 0))},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "Solution":
        part = ICPartition.from_blocks(data.get("independent_blocks", []), data.get("clique_blocks", []))
        stats = dict(data.get("stats", {}))
        return cls(frozenset(int(v) for v in data.get("deleted", [])), part, stats)


def verify_solution(g: Graph, r: int, l: int, k: int, sol: Solution) -> tuple[bool, str]:
    """Re-validate a certificate without any oracle.

    Returns ``(ok, reason)``.  Vertex indices outside ``g`` raise
    :class:`GraphError`, since such a certificate does not describe ``g`` at all.
    """
    part = sol.partition
    named = list(sol.deleted) + [v for blk in (part.independent_blocks or ()) for v in blk]
    named += [v for blk in (part.clique_blocks or ()) for v in blk]
    for v in named:
        if not 0 <= v < g.n:
            raise GraphError(f"certificate references vertex {v} outside 0..{g.n - 1}")
    if len(sol.deleted) > k:
        return False, f"deletion set has {len(sol.deleted)} > k={k} vertices"
    if not part.refined:
        return False, "partition carries no refinement"
    ind, cl = part.independent_blocks, part.clique_blocks
    if len(ind) > r:
        return False, f"{len(ind)} independent blocks exceed r={r}"
    if len(cl) > l:
        return False, f"{len(cl)} clique blocks exceed l={l}"
    seen: set[int] = set(sol.deleted)
    for blk in ind + cl:
        if seen & blk:
            return False, f"vertices {sorted(seen & blk)} appear twice"
        seen |= blk
    if len(seen) != g.n:
        missing = sorted(set(range(g.n)) - seen)
        return False, f"vertices {missing} are neither deleted nor placed"
    for blk in ind:
        if not is_independent(g, mask_of(blk)):
            return False, f"block {sorted(blk)} is not independent"
    for blk in cl:
        if not is_clique(g, mask_of(blk)):
            return False, f"block {sorted(blk)} is not a clique"
    return True, "ok"
