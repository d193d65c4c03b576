"""Immutable simple graphs over 0-indexed vertices with bitset adjacency.

Vertex sets are passed around either as iterables of indices (public API) or as
``int`` bitmasks (hot paths).  ``mask_of`` and ``bits`` convert between them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised on malformed graph input or contract violations."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {self.n}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop edge at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph induced on ``vertices``; also returns the old -> new index map.

        New indices follow ascending old index order.
        """
        keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for n={self.n}")
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    row |= 1 << j
            rows.append(row)
        return Graph(len(keep), tuple(rows)), index

    def delete(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        gone = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in gone)

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        rows = list(self.adj) + [row << shift for row in other.adj]
        return Graph(self.n + other.n, tuple(rows))

    # serialisation

    def to_dimacs(self) -> str:
        edges = self.edges()
        lines = [f"p edge {self.n} {len(edges)}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in edges]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls.from_edges(int(data["n"]), [(int(u), int(v)) for u, v in data["edges"]])


def parse_dimacs(text: str | bytes) -> Graph:
    """Parse a DIMACS edge file ("p edge n m" header, 1-indexed "e u v" lines).

    Comment lines ("c ...") and blank lines are skipped.  Repeated edges are
    accepted once.  Errors carry the offending 1-based line number.
    """
    if isinstance(text, bytes):
        text = text.decode()
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphError(f"line {lineno}: malformed header {raw.strip()!r}")
            try:
                n, _ = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header {raw.strip()!r}") from None
            if n < 0:
                raise GraphError(f"line {lineno}: negative vertex count")
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: malformed edge line {raw.strip()!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed edge line {raw.strip()!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"line {lineno}: endpoint out of range (n={n})")
            if u == v:
                raise GraphError(f"line {lineno}: loop edge at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphError("missing 'p edge' header")
    return Graph.from_edges(n, edges)


def is_clique(g: Graph, vertices: Iterable[int] | int) -> bool:
    s = vertices if isinstance(vertices, int) else mask_of(vertices)
    return all(s & ~(1 << v) & ~g.adj[v] == 0 for v in bits(s))


def is_independent(g: Graph, vertices: Iterable[int] | int) -> bool:
    s = vertices if isinstance(vertices, int) else mask_of(vertices)
    return all(g.adj[v] & s == 0 for v in bits(s))


def _find_hole(adj: tuple[int, ...], n: int) -> list[int] | None:
    """Induced odd cycle of length >= 5, or None.

    Grows induced paths whose first vertex is the smallest on the cycle.  A
    path s, p1, ..., pt stays induced as long as each new vertex sees only its
    predecessor among the path's vertices (s excepted, which closes the cycle).
    """
    for s in range(n):
        higher = ~((1 << (s + 1)) - 1)

        def extend(path: list[int], blocked: int) -> list[int] | None:
            # blocked: path vertices plus neighbours of all interior path vertices
            # except the last one.
            last = path[-1]
            for w in bits(adj[last] & higher & ~blocked):
                if adj[w] >> s & 1:
                    if len(path) >= 4 and len(path) % 2 == 0:
                        return path + [w]
                    continue
                # w is not adjacent to s; extend the path.
                found = extend(path + [w], blocked | (1 << w) | (adj[last] if len(path) > 1 else 0))
                if found:
                    return found
            return None

        for p1 in bits(adj[s] & higher):
            found = extend([s, p1], (1 << s) | (1 << p1))
            if found:
                return found
    return None


def find_odd_hole_or_antihole(g: Graph) -> tuple[list[int], str] | None:
    """Return ``(cycle, "hole"|"antihole")`` if ``g`` is not perfect, else None.

    The cycle lists vertices in cyclic order; for an antihole the cycle is
    induced in the complement.  Exhaustive, intended for small graphs.
    """
    hole = _find_hole(g.adj, g.n)
    if hole is not None:
        return hole, "hole"
    anti = _find_hole(g.complement().adj, g.n)
    if anti is not None:
        return anti, "antihole"
    return None


def is_perfect(g: Graph) -> bool:
    return find_odd_hole_or_antihole(g) is None
