"""Canonical labelling of small graphs by individualisation-refinement.

The canonical code is the lexicographically smallest upper-triangle adjacency
string over all leaves of the refinement tree.  Exact for any graph, but only
cheap for small ones (the intended use is n <= 10).
"""

from __future__ import annotations

from .graph import Graph


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into every cell."""
    changed = True
    while changed:
        changed = False
        for ci in range(len(cells)):
            target = 0
            for v in cells[ci]:
                target |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & target).bit_count(), []).append(v)
                if len(groups) > 1:
                    changed = True
                    out.extend(groups[key] for key in sorted(groups))
                else:
                    out.append(cell)
            if changed:
                cells = out
                break
    return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    code = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (row >> order[j] & 1)
    return code


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, order)``: ``order[i]`` is the vertex placed at canonical position ``i``."""
    adj = g.adj
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    if g.n == 0:
        return 0, []
    search([list(range(g.n))])
    return best[0], best[1]


def canonical_form(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def canonical_key(g: Graph) -> tuple[int, int]:
    return g.n, canonical_labeling(g)[0]


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_key(a) == canonical_key(b)
