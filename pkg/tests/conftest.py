import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import settings

from egstab.graph import Graph, from_edges

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@pytest.fixture(scope="session")
def atlas():
    """All 1253 graphs on at most 7 vertices (networkx atlas), as egstab graphs."""
    return [from_nx(h) for h in nx.graph_atlas_g()[1:]]


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def verdict():
    """Print (and remember) one PASS/FAIL line per acceptance criterion."""
    def emit(number: int, ok: bool, detail: str) -> bool:
        line = f"ACCEPTANCE {number:2d} {'PASS' if ok else 'FAIL'}: {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok
    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
