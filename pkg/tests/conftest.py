from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from starcolor.graphs import Graph


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def p4() -> Graph:
    from starcolor.generators import path_graph

    return path_graph(4)


def random_graph(rng: random.Random, n: int, edge_prob: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < edge_prob]
    return Graph.build(n, edges)


@st.composite
def small_graphs(draw, max_vertices: int = 7):
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.build(n, chosen)


@st.composite
def small_forests(draw, max_vertices: int = 9):
    """Random forest: a random spanning structure with some edges removed."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    edges = []
    for v in range(1, n):
        attach = draw(st.integers(min_value=0, max_value=v - 1))
        if draw(st.booleans()):
            edges.append((attach, v))
    return Graph.build(n, edges)
