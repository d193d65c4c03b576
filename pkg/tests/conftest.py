import random
import time

import pytest

from partize.brute import brute_min_deletion_size
from partize.generators import random_bipartite, random_chordal, random_graph
from partize.graph import Graph, is_perfect
from partize.partition import verify_solution
from partize.solver import solve

# criterion number -> (passed, detail); printed in the terminal summary
ACCEPTANCE: dict[int, tuple[bool, str]] = {}

PARAMS = [(r, l) for r in range(3) for l in range(3)]
KS = range(4)


def record(num: int, passed: bool, detail: str) -> None:
    ACCEPTANCE[num] = (passed, detail)
    print(f"criterion {num}: {'PASS' if passed else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if passed else 'FAIL'}  {detail}")


def perfect_corpus(count: int = 510, seed: int = 2024) -> list[tuple[str, Graph]]:
    """Seeded mix of bipartite, chordal and audited generic graphs on 4..10 vertices."""
    rng = random.Random(seed)
    out: list[tuple[str, Graph]] = []
    kinds = ["bipartite", "chordal", "generic"]
    while len(out) < count:
        kind = kinds[len(out) % 3]
        n = rng.randint(4, 10)
        if kind == "bipartite":
            n1 = rng.randint(1, n - 1)
            g = random_bipartite(n1, n - n1, rng.uniform(0.2, 0.8), rng)
        elif kind == "chordal":
            g = random_chordal(n, rng, tree_size=rng.randint(2, n), max_subtree=rng.randint(1, 4))
        else:
            g = random_graph(n, rng.uniform(0.2, 0.8), rng)
            if not is_perfect(g):
                continue
        out.append((kind, g))
    return out


class CorpusRun:
    def __init__(self):
        self.graphs = perfect_corpus()
        self.rows = []  # (index, r, l, k, solver_yes, brute_yes, certificate_ok, reason)
        self.runs = []  # every RunStats from every solve
        self.solve_seconds = 0.0
        self.brute_seconds = 0.0
        for idx, (_, g) in enumerate(self.graphs):
            for r, l in PARAMS:
                t = time.perf_counter()
                best = brute_min_deletion_size(g, r, l, max(KS))
                self.brute_seconds += time.perf_counter() - t
                for k in KS:
                    runs = []
                    t = time.perf_counter()
                    sol = solve(g, r, l, k, runs=runs)
                    self.solve_seconds += time.perf_counter() - t
                    self.runs.extend(runs)
                    ok, why = (True, "") if sol is None else verify_solution(g, r, l, k, sol)
                    self.rows.append((idx, r, l, k, sol is not None, best is not None and best <= k, ok, why))


@pytest.fixture(scope="session")
def corpus_run() -> CorpusRun:
    return CorpusRun()
