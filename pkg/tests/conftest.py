import random

import pytest
from hypothesis import strategies as st

from pathdist import builtin_graph
from pathdist.graph import Graph

from oracles import random_connected_graph

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def karate():
    return builtin_graph("karate")


@pytest.fixture
def record_criterion():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    def record(label, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    """Arbitrary simple graphs (possibly disconnected)."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_n, max_n))
    extra = draw(st.floats(0.0, 0.8))
    return random_connected_graph(random.Random(seed), n, extra)
