"""d-Hitting Set: set systems, sunflower kernelisation and bounded branching."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class SetSystem:
    """Sets over the universe ``0..universe-1``.

    ``provenance[i]``, when present, is ``(member_id, embedding)`` for the
    forbidden graph whose induced copy produced ``sets[i]``.
    """

    universe: int
    sets: tuple[frozenset[int], ...]
    d: int = 0
    provenance: tuple | None = field(default=None, compare=False)

    @classmethod
    def of(cls, universe: int, sets: Iterable[Iterable[int]], d: int | None = None) -> "SetSystem":
        fs = tuple(frozenset(s) for s in sets)
        width = max((len(s) for s in fs), default=0)
        return cls(universe, fs, width if d is None else d)

    def __len__(self) -> int:
        return len(self.sets)

    def is_hit_by(self, chosen: Iterable[int]) -> bool:
        c = set(chosen)
        return all(s & c for s in self.sets)

    def to_json(self, k: int) -> dict:
        return {
            "universe": self.universe,
            "d": self.d,
            "k": k,
            "sets": sorted(sorted(s) for s in self.sets),
        }

    def dumps(self, k: int) -> str:
        return json.dumps(self.to_json(k))

    @classmethod
    def from_json(cls, data: dict) -> tuple["SetSystem", int]:
        sys = cls.of(int(data["universe"]), data["sets"], int(data.get("d", 0)) or None)
        return sys, int(data["k"])


def _normalise(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Drop duplicates and strict supersets; order by (size, sorted elements)."""
    uniq = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset[int]] = []
    for s in uniq:
        if not any(t <= s for t in kept):
            kept.append(s)
    return kept


def find_sunflower(sets: list[frozenset[int]], petals: int) -> tuple[frozenset[int], list[frozenset[int]]] | None:
    """A sunflower with at least ``petals`` petals, as ``(core, members)``, or None.

    Constructive Erdos-Rado: a maximal disjoint subfamily either is the
    sunflower (empty core) or has a small union, one of whose elements is then
    shared by many sets; recurse on those with that element removed.  Always
    succeeds when there are more than ``d! (petals - 1)^d`` sets.
    """
    disjoint: list[frozenset[int]] = []
    union: set[int] = set()
    for s in sets:
        if not (s & union):
            disjoint.append(s)
            union |= s
    if len(disjoint) >= petals:
        return frozenset(), disjoint
    if not union:
        return None
    freq = Counter(x for s in sets for x in s if x in union)
    x = min(freq, key=lambda e: (-freq[e], e))
    found = find_sunflower([s - {x} for s in sets if x in s], petals)
    if found is None:
        return None
    core, members = found
    return core | {x}, [m | {x} for m in members]


@dataclass(frozen=True)
class KernelResult:
    system: SetSystem
    forced: frozenset[int]
    k: int
    verdict: bool | None  # False: no hitting set of size k; True: already hit; None: undecided

    def to_json(self) -> dict:
        out = self.system.to_json(self.k)
        out["forced"] = sorted(self.forced)
        out["answer"] = {True: "yes", False: "no", None: "undecided"}[self.verdict]
        return out


def sunflower_kernel(sys: SetSystem, k: int, d: int | None = None) -> KernelResult:
    """Reduce ``sys`` to an equivalent instance for budget ``k``.

    Rules, applied until none fires:

    * an empty set cannot be hit: NO;
    * a singleton ``{x}`` forces ``x``: take it, drop the sets it hits, ``k -= 1``;
    * a sunflower with ``k + 1`` petals: with an empty core the answer is NO,
      otherwise every size-``k`` solution hits the core, so the petals are
      replaced by the core.

    Supersets of other sets are dropped throughout.
    """
    d = sys.d if d is None else d
    if any(len(s) > d for s in sys.sets):
        raise ValueError(f"set system has sets larger than d={d}")
    sets = _normalise(sys.sets)
    forced: set[int] = set()

    def result(verdict: bool | None) -> KernelResult:
        return KernelResult(SetSystem(sys.universe, tuple(sets), d), frozenset(forced), k, verdict)

    while True:
        if k < 0 or any(not s for s in sets):
            return result(False)
        if not sets:
            return result(True)
        single = next((s for s in sets if len(s) == 1), None)
        if single is not None:
            (x,) = single
            forced.add(x)
            k -= 1
            sets = [s for s in sets if x not in s]
            continue
        flower = find_sunflower(sets, k + 1)
        if flower is None:
            return result(None)
        core, members = flower
        if not core:
            return result(False)
        drop = set(members)
        sets = _normalise([s for s in sets if s not in drop] + [core])


def branch_hitting_set(sys: SetSystem, k: int, stats: dict | None = None) -> frozenset[int] | None:
    """Hitting set of size at most ``k`` by branching on the first unhit set.

    Elements of the branching set are tried in ascending order, so the search
    tree has at most ``d^k (k + 1)`` nodes.
    """
    sets = list(sys.sets)
    nodes = [0]

    def go(chosen: frozenset[int], budget: int) -> frozenset[int] | None:
        nodes[0] += 1
        target = next((s for s in sets if not (s & chosen)), None)
        if target is None:
            return chosen
        if budget == 0:
            return None
        for x in sorted(target):
            res = go(chosen | {x}, budget - 1)
            if res is not None:
                return res
        return None

    res = go(frozenset(), k) if k >= 0 else None
    if stats is not None:
        stats["nodes"] = nodes[0]
    return res


def brute_hitting_set(sys: SetSystem, k: int) -> frozenset[int] | None:
    """Smallest hitting set of size at most ``k`` by enumeration (test oracle)."""
    from itertools import combinations

    elems = sorted(set().union(*sys.sets)) if sys.sets else []
    for size in range(k + 1):
        for combo in combinations(elems, size):
            if sys.is_hit_by(combo):
                return frozenset(combo)
    return None
