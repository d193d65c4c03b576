"""Colouring / clique-cover oracles for perfect graphs.

Given a perfect graph and an integer ``l`` we either partition the vertices
into at most ``l`` independent sets or exhibit a clique on ``l + 1`` vertices
(and dually for clique covers).  Rather than a general perfect-graph algorithm
the work is dispatched on a recognised hereditary subclass:

* bipartite: BFS two-colouring; clique covers via maximum matching (Koenig).
* chordal: greedy colouring along a reversed perfect elimination ordering;
  clique covers by Gavril's greedy independent set.
* co-bipartite / co-chordal: the above, run on the complement.
* generic-small: exact branch and bound, for graphs up to ``cap`` vertices.

All internals operate on ``(adj, mask)`` pairs so induced subgraphs never need
to be materialised; the public functions take a :class:`Graph`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable

from .graph import Graph, bits, lowest

DEFAULT_CAP = 24

CLASS_ORDER = ("bipartite", "chordal", "co-bipartite", "co-chordal", "generic-small")


class UnsupportedGraph(ValueError):
    """The graph is in none of the supported classes and exceeds the generic cap."""


class OracleError(RuntimeError):
    """An oracle found neither outcome; the input was not perfect."""


@dataclass(frozen=True)
class OracleResult:
    """Either ``partition`` (the blocks) or ``certificate`` (``l + 1`` vertices)."""

    partition: tuple[frozenset[int], ...] | None = None
    certificate: frozenset[int] | None = None

    @property
    def is_partition(self) -> bool:
        return self.partition is not None


Adj = tuple[int, ...]
Outcome = tuple[list[int] | None, int | None]  # (block masks, certificate mask)


def _take(mask: int, count: int) -> int:
    """The ``count`` lowest-indexed vertices of ``mask``."""
    out = 0
    for v in bits(mask):
        if count == 0:
            break
        out |= 1 << v
        count -= 1
    return out


# ---------------------------------------------------------------- bipartite


def two_colouring(adj: Adj, mask: int) -> tuple[int, int] | None:
    """Sides ``(A, B)`` of a proper 2-colouring of ``G[mask]``, or None."""
    side_a = side_b = 0
    seen = 0
    for root in bits(mask):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        side_a |= 1 << root
        queue = deque([root])
        while queue:
            v = queue.popleft()
            v_in_a = side_a >> v & 1
            for u in bits(adj[v] & mask):
                if seen >> u & 1:
                    if (side_a >> u & 1) == v_in_a:
                        return None
                    continue
                seen |= 1 << u
                if v_in_a:
                    side_b |= 1 << u
                else:
                    side_a |= 1 << u
                queue.append(u)
    return side_a, side_b


def _bip_sides(adj: Adj, mask: int) -> tuple[int, int]:
    sides = two_colouring(adj, mask)
    if sides is None:
        raise OracleError("graph is not bipartite")
    return sides


def _bip_colour(adj: Adj, mask: int, l: int) -> Outcome:
    if mask == 0:
        return [], None
    a, b = _bip_sides(adj, mask)
    blocks = [blk for blk in (a, b) if blk]
    has_edge = any(adj[v] & mask for v in bits(mask))
    if not has_edge:
        blocks = [mask]
    if len(blocks) <= l:
        return blocks, None
    if l == 0:
        return None, 1 << lowest(mask)
    # l == 1 and there is an edge: the lowest-indexed one is a 2-clique.
    for v in bits(mask):
        nb = adj[v] & mask
        if nb:
            return None, (1 << v) | (1 << lowest(nb))
    raise AssertionError("unreachable")


def _bip_matching(adj: Adj, left: int, right: int) -> dict[int, int]:
    """Maximum matching between ``left`` and ``right`` (Kuhn's augmenting paths).

    Returns the matching as a symmetric vertex -> partner map.
    """
    match: dict[int, int] = {}

    def augment(v: int, visited: list[int]) -> bool:
        for u in bits(adj[v] & right & ~visited[0]):
            visited[0] |= 1 << u
            w = match.get(u)
            if w is None or augment(w, visited):
                match[u] = v
                match[v] = u
                return True
        return False

    for v in bits(left):
        augment(v, [0])
    return match


def _bip_mis(adj: Adj, mask: int) -> int:
    """Maximum independent set of bipartite ``G[mask]`` via Koenig's theorem."""
    left, right = _bip_sides(adj, mask)
    match = _bip_matching(adj, left, right)
    # Alternating reachability from unmatched left vertices.
    z = 0
    queue = deque(v for v in bits(left) if v not in match)
    for v in queue:
        z |= 1 << v
    while queue:
        v = queue.popleft()
        if left >> v & 1:
            nxt = adj[v] & right & ~z
            for u in bits(nxt):
                z |= 1 << u
                queue.append(u)
        else:
            w = match.get(v)
            if w is not None and not z >> w & 1:
                z |= 1 << w
                queue.append(w)
    return (left & z) | (right & ~z)


def _bip_cover(adj: Adj, mask: int, l: int) -> Outcome:
    if mask == 0:
        return [], None
    left, right = _bip_sides(adj, mask)
    match = _bip_matching(adj, left, right)
    blocks = []
    for v in bits(mask):
        w = match.get(v)
        if w is None:
            blocks.append(1 << v)
        elif v < w:
            blocks.append((1 << v) | (1 << w))
    if len(blocks) <= l:
        return blocks, None
    return None, _take(_bip_mis(adj, mask), l + 1)


def _bip_clique(adj: Adj, mask: int) -> int:
    for v in bits(mask):
        nb = adj[v] & mask
        if nb:
            return (1 << v) | (1 << lowest(nb))
    return _take(mask, 1)


# ------------------------------------------------------------------ chordal


def lexbfs(adj: Adj, mask: int) -> list[int]:
    """Lexicographic BFS visiting order of ``G[mask]``; ties go to the lowest index."""
    labels: dict[int, list[int]] = {v: [] for v in bits(mask)}
    order = []
    step = len(labels)
    while labels:
        v = max(labels, key=lambda u: (labels[u], -u))
        del labels[v]
        order.append(v)
        for u in bits(adj[v] & mask):
            if u in labels:
                labels[u].append(step)
        step -= 1
    return order


def peo(adj: Adj, mask: int) -> list[int] | None:
    order = lexbfs(adj, mask)[::-1]
    return order if is_peo(adj, mask, order) else None


def is_peo(adj: Adj, mask: int, order: list[int]) -> bool:
    """Check that every vertex's later neighbours in ``order`` form a clique."""
    pos = {v: i for i, v in enumerate(order)}
    later = mask
    for v in order:
        later &= ~(1 << v)
        nb = adj[v] & later
        if nb:
            u = min(bits(nb), key=pos.__getitem__)
            if nb & ~(1 << u) & ~adj[u]:
                return False
    return True


def _chordal_order(adj: Adj, mask: int) -> list[int]:
    order = peo(adj, mask)
    if order is None:
        raise OracleError("graph is not chordal")
    return order


def _chordal_colour(adj: Adj, mask: int, l: int) -> Outcome:
    order = _chordal_order(adj, mask)
    colour: dict[int, int] = {}
    blocks: list[int] = []
    for v in reversed(order):
        taken = {colour[u]: u for u in sorted(bits(adj[v] & mask), reverse=True) if u in colour}
        c = 0
        while c in taken:
            c += 1
        if c >= l:
            # Earlier-coloured neighbours are later in the PEO, hence a clique;
            # they use every colour below c, so one per colour plus v has size l + 1.
            cert = 1 << v
            for k in range(l):
                cert |= 1 << taken[k]
            return None, cert
        colour[v] = c
        if c == len(blocks):
            blocks.append(0)
        blocks[c] |= 1 << v
    return blocks, None


def _chordal_cover(adj: Adj, mask: int, l: int) -> Outcome:
    order = _chordal_order(adj, mask)
    covered = 0
    later = mask
    indep = 0
    blocks = []
    for v in order:
        later &= ~(1 << v)
        if covered >> v & 1:
            continue
        clique = (1 << v) | (adj[v] & later & ~covered)
        covered |= clique
        indep |= 1 << v
        blocks.append(clique)
    if len(blocks) <= l:
        return blocks, None
    return None, _take(indep, l + 1)


def _chordal_clique(adj: Adj, mask: int) -> int:
    best = 0
    later = mask
    for v in _chordal_order(adj, mask):
        later &= ~(1 << v)
        cand = (1 << v) | (adj[v] & later)
        if cand.bit_count() > best.bit_count():
            best = cand
    return best


def _chordal_mis(adj: Adj, mask: int) -> int:
    order = _chordal_order(adj, mask)
    covered = 0
    indep = 0
    for v in order:
        if covered >> v & 1:
            continue
        indep |= 1 << v
        covered |= (1 << v) | adj[v]
    return indep


# ------------------------------------------------------------------ generic


def exact_max_clique(adj: Adj, mask: int) -> int:
    """Maximum clique by branch and bound with greedy-colouring bounds."""
    best = [0, 0]  # size, mask

    def colour_sort(cand: int) -> list[tuple[int, int]]:
        # Greedy colour classes; returns (vertex, bound) in increasing bound order.
        out = []
        rest = cand
        k = 0
        while rest:
            k += 1
            q = rest
            while q:
                v = lowest(q)
                q &= ~(1 << v) & ~adj[v]
                rest &= ~(1 << v)
                out.append((v, k))
        return out

    def expand(clique: int, size: int, cand: int) -> None:
        for v, bound in reversed(colour_sort(cand)):
            if size + bound <= best[0]:
                return
            new = clique | (1 << v)
            nxt = cand & adj[v]
            if nxt:
                expand(new, size + 1, nxt)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, new
            cand &= ~(1 << v)

    if mask:
        expand(0, 0, mask)
    return best[1]


def exact_colouring(adj: Adj, mask: int, l: int) -> list[int] | None:
    """A colouring of ``G[mask]`` with at most ``l`` colours (DSATUR backtracking)."""
    verts = list(bits(mask))
    if not verts:
        return []
    if l == 0:
        return None
    colour: dict[int, int] = {}
    classes: list[int] = []

    def pick() -> int:
        best_key, best_v = None, -1
        for v in verts:
            if v in colour:
                continue
            sat = len({colour[u] for u in bits(adj[v] & mask) if u in colour})
            key = (sat, (adj[v] & mask).bit_count(), -v)
            if best_key is None or key > best_key:
                best_key, best_v = key, v
        return best_v

    def solve() -> bool:
        if len(colour) == len(verts):
            return True
        v = pick()
        options = list(range(len(classes)))
        if len(classes) < l:
            options.append(len(classes))
        for c in options:
            if c < len(classes) and classes[c] & adj[v]:
                continue
            if c == len(classes):
                classes.append(0)
            classes[c] |= 1 << v
            colour[v] = c
            if solve():
                return True
            del colour[v]
            classes[c] &= ~(1 << v)
            if classes[c] == 0:
                classes.pop()
        return False

    return list(classes) if solve() else None


def _exact_colour(adj: Adj, mask: int, l: int) -> Outcome:
    clique = exact_max_clique(adj, mask)
    if clique.bit_count() > l:
        return None, _take(clique, l + 1)
    blocks = exact_colouring(adj, mask, l)
    if blocks is None:
        raise OracleError(f"chromatic number exceeds {l} but clique number does not: not perfect")
    return blocks, None


# ----------------------------------------------------------------- dispatch


def _complement_adj(g: Graph) -> Adj:
    return g.complement().adj


def classify_adj(adj: Adj, cadj: Adj, n: int, cap: int = DEFAULT_CAP) -> str:
    mask = (1 << n) - 1
    if two_colouring(adj, mask) is not None:
        return "bipartite"
    if peo(adj, mask) is not None:
        return "chordal"
    if two_colouring(cadj, mask) is not None:
        return "co-bipartite"
    if peo(cadj, mask) is not None:
        return "co-chordal"
    if n <= cap:
        return "generic-small"
    raise UnsupportedGraph(
        f"graph on {n} vertices is not bipartite, chordal or their complement, "
        f"and exceeds the generic cap of {cap}"
    )


def classify(g: Graph, cap: int = DEFAULT_CAP) -> str:
    """First matching class tag in :data:`CLASS_ORDER`."""
    return classify_adj(g.adj, _complement_adj(g), g.n, cap)


# class tag -> (primitive, whether it runs on the complement)
_Prim = Callable[[Adj, int, int], Outcome]
_COLOUR: dict[str, tuple[_Prim, bool]] = {
    "bipartite": (_bip_colour, False),
    "chordal": (_chordal_colour, False),
    "co-bipartite": (_bip_cover, True),
    "co-chordal": (_chordal_cover, True),
    "generic-small": (_exact_colour, False),
}
_COVER: dict[str, tuple[_Prim, bool]] = {
    "bipartite": (_bip_cover, False),
    "chordal": (_chordal_cover, False),
    "co-bipartite": (_bip_colour, True),
    "co-chordal": (_chordal_colour, True),
    "generic-small": (_exact_colour, True),
}
_CLIQUE: dict[str, tuple[Callable[[Adj, int], int], bool]] = {
    "bipartite": (_bip_clique, False),
    "chordal": (_chordal_clique, False),
    "co-bipartite": (_bip_mis, True),
    "co-chordal": (_chordal_mis, True),
    "generic-small": (exact_max_clique, False),
}
_MIS: dict[str, tuple[Callable[[Adj, int], int], bool]] = {
    "bipartite": (_bip_mis, False),
    "chordal": (_chordal_mis, False),
    "co-bipartite": (_bip_clique, True),
    "co-chordal": (_chordal_clique, True),
    "generic-small": (exact_max_clique, True),
}


class Oracle:
    """Oracle bound to a host graph, answering queries on induced subgraphs.

    All supported classes are hereditary, so the host's class is valid for
    every ``G[mask]``; the host is classified once.  Answers are pure
    functions of ``(mask, l)`` and are cached.
    """

    CACHE_LIMIT = 1 << 18

    def __init__(self, g: Graph, cap: int = DEFAULT_CAP, kind: str | None = None):
        self.graph = g
        self.adj = g.adj
        self.cadj = _complement_adj(g)
        self.kind = kind or classify_adj(self.adj, self.cadj, g.n, cap)
        self.calls = 0
        self._cache: dict[tuple[int, int, int], Outcome] = {}

    def _query(self, table: dict, tag: int, mask: int, l: int) -> Outcome:
        self.calls += 1
        key = (tag, mask, l)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if len(self._cache) >= self.CACHE_LIMIT:
            self._cache.clear()
        prim, comp = table[self.kind]
        out = self._cache[key] = prim(self._adj(comp), mask, l)
        return out

    def _adj(self, comp: bool) -> Adj:
        return self.cadj if comp else self.adj

    def colour_or_clique(self, mask: int, l: int) -> Outcome:
        return self._query(_COLOUR, 0, mask, l)

    def cover_or_independent(self, mask: int, l: int) -> Outcome:
        return self._query(_COVER, 1, mask, l)

    def max_clique(self, mask: int) -> int:
        prim, comp = _CLIQUE[self.kind]
        return prim(self._adj(comp), mask)

    def max_independent_set(self, mask: int) -> int:
        prim, comp = _MIS[self.kind]
        return prim(self._adj(comp), mask)


def _to_result(outcome: Outcome) -> OracleResult:
    blocks, cert = outcome
    if blocks is not None:
        return OracleResult(partition=tuple(frozenset(bits(b)) for b in blocks))
    return OracleResult(certificate=frozenset(bits(cert)))


def color_or_clique(g: Graph, l: int, cap: int = DEFAULT_CAP) -> OracleResult:
    """At most ``l`` independent blocks covering ``g``, or a clique of size ``l + 1``."""
    if l < 0:
        raise ValueError("l must be non-negative")
    return _to_result(Oracle(g, cap).colour_or_clique(g.full_mask, l))


def cover_or_independent(g: Graph, l: int, cap: int = DEFAULT_CAP) -> OracleResult:
    """At most ``l`` clique blocks covering ``g``, or an independent set of size ``l + 1``."""
    if l < 0:
        raise ValueError("l must be non-negative")
    return _to_result(Oracle(g, cap).cover_or_independent(g.full_mask, l))


def max_clique(g: Graph, cap: int = DEFAULT_CAP) -> frozenset[int]:
    return frozenset(bits(Oracle(g, cap).max_clique(g.full_mask)))


def max_independent_set(g: Graph, cap: int = DEFAULT_CAP) -> frozenset[int]:
    return frozenset(bits(Oracle(g, cap).max_independent_set(g.full_mask)))


def lexbfs_peo(g: Graph) -> list[int] | None:
    """A perfect elimination ordering of ``g`` if it is chordal, else None."""
    return peo(g.adj, g.full_mask)
