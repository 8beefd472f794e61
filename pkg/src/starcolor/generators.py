"""Graph generators: the hub-and-subdivision family, standard families, and
seeded random growth of graphs avoiding a forbidden subgraph.

Randomness comes from ``random.Random`` (Mersenne Twister) seeded explicitly,
so corpora reproduce bit for bit from their recorded seeds.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError
from .graphs import Graph, contains_subgraph


@dataclass(frozen=True)
class GmnLayout:
    """Vertex layout of the subdivided complete graph: m hubs first, then one
    subdivision vertex per (i < j, copy k), lexicographic; indices 1-based."""

    m: int
    n: int
    hub_ids: tuple[int, ...]
    subdivision_ids: dict[tuple[int, int, int], int]  # (i, j, k) -> vertex id


def gen_gmn(m: int, n: int) -> tuple[Graph, GmnLayout]:
    """Complete graph on m hubs with every edge replaced by n internally
    disjoint paths of length two."""
    if m < 2 or n < 1:
        raise DomainError("need m >= 2 and n >= 1")
    hubs = tuple(range(m))
    sub: dict[tuple[int, int, int], int] = {}
    next_id = m
    edges = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(1, n + 1):
                sub[(i, j, k)] = next_id
                edges.append((i - 1, next_id))
                edges.append((j - 1, next_id))
                next_id += 1
    return Graph.build(next_id, edges), GmnLayout(m, n, hubs, sub)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise DomainError("path needs at least one vertex")
    return Graph.build(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs at least three vertices")
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise DomainError("complete graph needs at least one vertex")
    return Graph.build(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """Center 0 with the given number of leaves."""
    if leaves < 1:
        raise DomainError("star needs at least one leaf")
    return Graph.build(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def spider_graph(*leg_lengths: int) -> Graph:
    """Center 0 with disjoint legs of the given lengths."""
    if not leg_lengths or any(l < 1 for l in leg_lengths):
        raise DomainError("spider needs legs of positive length")
    edges = []
    next_id = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, next_id))
            prev = next_id
            next_id += 1
    return Graph.build(next_id, edges)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise DomainError("both parts need at least one vertex")
    return Graph.build(a + b, ((i, a + j) for i in range(a) for j in range(b)))


_FAMILIES = {
    "path": lambda params: path_graph(*params),
    "star": lambda params: star_graph(*params),
    "cycle": lambda params: cycle_graph(*params),
    "complete": lambda params: complete_graph(*params),
    "spider": lambda params: spider_graph(*params),
}


def gen_family(kind: str, params: tuple[int, ...]) -> Graph:
    """Named standard families; spider takes its leg lengths as params."""
    key = kind.lower()
    if key not in _FAMILIES:
        raise DomainError(f"unknown family {kind!r}; choose from {sorted(_FAMILIES)}")
    return _FAMILIES[key](params)


def gen_random_ffree(f: Graph, n: int, target_edges: int, seed: int,
                     attempts: int = 100) -> Graph:
    """Grow a graph on n vertices by proposing uniform random non-edges and
    accepting only those that keep the graph free of ``f``.

    Stops at the edge target, after the given number of consecutive
    rejections, or when no non-edge remains. Deterministic per seed.
    """
    if n < 1:
        raise DomainError("need at least one vertex")
    rng = random.Random(seed)
    edges: set[tuple[int, int]] = set()
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rejections = 0
    while len(edges) < target_edges and rejections < attempts:
        non_edges = [p for p in all_pairs if p not in edges]
        if not non_edges:
            break
        pair = non_edges[rng.randrange(len(non_edges))]
        candidate = Graph(n, frozenset(edges | {pair}))
        if contains_subgraph(candidate, f) is None:
            edges.add(pair)
            rejections = 0
        else:
            rejections += 1
    return Graph(n, frozenset(edges))
