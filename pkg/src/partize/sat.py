"""CNF-SAT to (n, 1)-partition recognition.

For a formula over variables x1..xn with clauses C1..Cm the graph has one
vertex per literal and two per clause:

* ``v(+x_i) = 2(i-1)``, ``v(-x_i) = 2(i-1) + 1``;
* ``w(C_j, copy) = 2n + 2(j-1) + (copy - 1)`` for ``copy`` in {1, 2}.

Literal vertices of distinct variables are all adjacent, the two literals of
one variable are not.  A literal vertex sees both copies of every clause that
does not contain the literal.  Clause vertices are pairwise non-adjacent.

The formula is satisfiable iff the graph splits into ``n`` independent sets
and one clique; the converters below move certificates in both directions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import Graph, find_odd_hole_or_antihole
from .partition import ICPartition, Solution, verify_solution


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for j, clause in enumerate(self.clauses, 1):
            if not clause:
                raise CnfError(f"clause {j} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError(f"clause {j}: literal {lit} outside 1..{self.num_vars}")
            if any(-lit in clause for lit in clause):
                raise CnfError(f"clause {j} contains a variable and its negation")

    @classmethod
    def of(cls, num_vars: int, clauses) -> "CnfFormula":
        return cls(num_vars, tuple(tuple(dict.fromkeys(c)) for c in clauses))

    def satisfied_by(self, tau: dict[int, int]) -> bool:
        return all(any(literal_value(tau, lit) for lit in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def literal_value(tau: dict[int, int], lit: int) -> bool:
    return tau[abs(lit)] == (1 if lit > 0 else 0)


def parse_dimacs_cnf(text: str | bytes, strip_tautologies: bool = False) -> CnfFormula:
    """Parse DIMACS CNF.  Clauses may span lines; each ends at a ``0``.

    Tautological clauses are an error unless ``strip_tautologies`` drops them.
    """
    if isinstance(text, bytes):
        text = text.decode()
    num_vars = num_clauses = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c" or parts[0] == "%":
            if parts and parts[0] == "%":
                break
            continue
        if parts[0] == "p":
            if num_vars is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"line {lineno}: malformed header {raw.strip()!r}")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise CnfError(f"line {lineno}: malformed header {raw.strip()!r}") from None
            continue
        if num_vars is None:
            raise CnfError(f"line {lineno}: clause before header")
        for tok in parts:
            try:
                lit = int(tok)
            except ValueError:
                raise CnfError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
            elif abs(lit) > num_vars:
                raise CnfError(f"line {lineno}: literal {lit} outside 1..{num_vars}")
            else:
                current.append(lit)
    if num_vars is None:
        raise CnfError("missing 'p cnf' header")
    if current:
        clauses.append(current)
    if num_clauses is not None and len(clauses) != num_clauses:
        raise CnfError(f"header announces {num_clauses} clauses, found {len(clauses)}")
    kept = []
    for j, clause in enumerate(clauses, 1):
        if any(-lit in clause for lit in clause):
            if strip_tautologies:
                continue
            raise CnfError(f"clause {j} is a tautology (contains a variable and its negation)")
        kept.append(clause)
    return CnfFormula.of(num_vars, kept)


def literal_vertex(lit: int) -> int:
    return 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)


def vertex_literal(v: int) -> int:
    var = v // 2 + 1
    return var if v % 2 == 0 else -var


@dataclass(frozen=True)
class ReducedInstance:
    formula: CnfFormula
    graph: Graph

    @property
    def r(self) -> int:
        return self.formula.num_vars

    @property
    def l(self) -> int:
        return 1

    def clause_vertices(self, j: int) -> tuple[int, int]:
        """Both copies of clause ``j`` (1-based)."""
        base = 2 * self.formula.num_vars + 2 * (j - 1)
        return base, base + 1

    def label(self, v: int) -> dict:
        n2 = 2 * self.formula.num_vars
        if v < n2:
            lit = vertex_literal(v)
            return {"literal": f"{'+' if lit > 0 else '-'}x{abs(lit)}"}
        j, copy = divmod(v - n2, 2)
        return {"clause": j + 1, "copy": copy + 1}

    def sidecar(self) -> dict:
        return {
            "r": self.r,
            "l": self.l,
            "num_vars": self.formula.num_vars,
            "num_clauses": len(self.formula.clauses),
            "labels": [self.label(v) for v in range(self.graph.n)],
        }

    def dumps_sidecar(self) -> str:
        return json.dumps(self.sidecar(), indent=1)


def build_instance(phi: CnfFormula) -> ReducedInstance:
    n = phi.num_vars
    edges = []
    for a in range(2 * n):
        for b in range(a + 1, 2 * n):
            if a // 2 != b // 2:
                edges.append((a, b))
    for j, clause in enumerate(phi.clauses):
        w1 = 2 * n + 2 * j
        members = {literal_vertex(lit) for lit in clause}
        for v in range(2 * n):
            if v not in members:
                edges.append((v, w1))
                edges.append((v, w1 + 1))
    return ReducedInstance(phi, Graph.from_edges(2 * n + 2 * len(phi.clauses), edges))


def expected_edge_count(phi: CnfFormula) -> int:
    n = phi.num_vars
    return 4 * (n * (n - 1) // 2) + sum(2 * (2 * n - len(c)) for c in phi.clauses)


def default_witness(phi: CnfFormula, tau: dict[int, int]) -> dict[int, int]:
    """Map each clause (1-based) to its lowest-indexed true literal."""
    f = {}
    for j, clause in enumerate(phi.clauses, 1):
        true_lits = [lit for lit in clause if literal_value(tau, lit)]
        if not true_lits:
            raise CnfError(f"assignment falsifies clause {j}")
        f[j] = min(true_lits, key=literal_vertex)
    return f


def partition_from_assignment(inst: ReducedInstance, tau: dict[int, int],
                              f: dict[int, int] | None = None) -> ICPartition:
    """Turn a satisfying assignment into n independent blocks and one clique."""
    phi = inst.formula
    n = phi.num_vars
    if set(tau) != set(range(1, n + 1)):
        raise CnfError("assignment must cover exactly the variables 1..n")
    if not phi.satisfied_by(tau):
        raise CnfError("assignment does not satisfy the formula")
    if f is None:
        f = default_witness(phi, tau)
    blocks: dict[int, set[int]] = {}
    clique = []
    for var in range(1, n + 1):
        true_lit = var if tau[var] else -var
        blocks[true_lit] = {literal_vertex(true_lit)}
        clique.append(literal_vertex(-true_lit))
    for j, clause in enumerate(phi.clauses, 1):
        lit = f.get(j)
        if lit is None or lit not in clause or not literal_value(tau, lit):
            raise CnfError(f"witness for clause {j} is not a true literal of the clause")
        blocks[lit].update(inst.clause_vertices(j))
    ind = [sorted(blocks[lit]) for lit in sorted(blocks, key=literal_vertex)]
    return ICPartition.from_blocks(ind, [sorted(clique)] if clique else [])


def assignment_from_partition(inst: ReducedInstance, part: ICPartition) -> dict[int, int]:
    """Read a satisfying assignment off a valid (n, 1)-partition.

    Literals whose vertex lies in the clique are false; a variable with neither
    literal in the clique is set true.
    """
    n = inst.formula.num_vars
    sol = Solution(frozenset(), part)
    ok, why = verify_solution(inst.graph, n, 1, 0, sol)
    if not ok:
        raise CnfError(f"not a valid ({n}, 1)-partition: {why}")
    in_clique = set().union(*part.clique_blocks) if part.clique_blocks else set()
    tau = {}
    for var in range(1, n + 1):
        pos, neg = literal_vertex(var), literal_vertex(-var)
        if pos in in_clique and neg in in_clique:
            raise CnfError(f"both literals of x{var} lie in the clique")
        tau[var] = 0 if pos in in_clique else 1
    if not inst.formula.satisfied_by(tau):
        raise AssertionError("recovered assignment does not satisfy the formula")
    return tau


def audit_perfect(inst: ReducedInstance) -> tuple[list[int], str] | None:
    """Odd hole / antihole in the reduced graph; always None for a correct build."""
    return find_odd_hole_or_antihole(inst.graph)
