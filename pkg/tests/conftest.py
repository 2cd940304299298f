import random
from collections import defaultdict

import pytest

from degbound.bounds import audit_all, builtin_catalog
from degbound.enumeration import connected_graphs
from degbound.graphs import Graph

# criterion number -> label, and the pass/fail outcomes recorded while the
# acceptance module runs; printed as one line per criterion at session end
ACCEPTANCE_LABELS: dict[int, str] = {}
ACCEPTANCE_OUTCOMES: dict[int, list[tuple[bool, str]]] = defaultdict(list)


def record_acceptance(num: int, label: str, ok: bool, detail: str = ""):
    ACCEPTANCE_LABELS[num] = label
    ACCEPTANCE_OUTCOMES[num].append((ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_OUTCOMES):
        outcomes = ACCEPTANCE_OUTCOMES[num]
        failures = [d for ok, d in outcomes if not ok]
        status = "PASS" if not failures else "FAIL"
        line = f"criterion {num} ({ACCEPTANCE_LABELS[num]}): {status}"
        if failures:
            line += " [" + "; ".join(failures) + "]"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def populations():
    """Connected graphs by order, 2..7 (enumeration results are cached)."""
    return {n: connected_graphs(n) for n in range(2, 8)}


@pytest.fixture(scope="session")
def population_2_7(populations):
    out = []
    for n in range(2, 8):
        out.extend(populations[n])
    return out


@pytest.fixture(scope="session")
def full_reports(population_2_7):
    """Audit of the whole catalog over all connected graphs of order 2..7."""
    return audit_all(builtin_catalog(), population_2_7,
                     population="enumerate(n=2..7)")


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.1, 0.9)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus random extra edges."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    extra = rng.randrange(0, n)
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))
