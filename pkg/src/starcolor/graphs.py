"""Immutable simple graphs plus the traversal and containment primitives.

Vertices are dense integers ``0..vertex_count-1``; labels are cosmetic only.
All tie-breaking (DFS neighbor order, backtracking candidate order) is by
ascending vertex id so every operation is deterministic.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import Budget, DisconnectedGraph, DomainError, as_budget

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph: no loops, no parallel edges."""

    vertex_count: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise DomainError("vertex_count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise DomainError(f"bad edge ({u}, {v}) for {self.vertex_count} vertices")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise DomainError("labels length must match vertex_count")

    @staticmethod
    def build(vertex_count: int, edges: Iterable[tuple[int, int]],
              labels: Iterable[str] | None = None) -> "Graph":
        """Normalize edge orientation, drop duplicates, reject loops."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return Graph(vertex_count, frozenset(normalized),
                     tuple(labels) if labels is not None else None)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class SubgraphWitness:
    """Injective embedding of a pattern into a host, edge by edge."""

    vertex_map: dict[int, int]
    edge_list: tuple[Edge, ...]

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        if len(set(self.vertex_map.values())) != len(self.vertex_map):
            return False
        if set(self.vertex_map) != set(range(pattern.vertex_count)):
            return False
        realized = []
        for u, v in pattern.edge_list:
            hu, hv = self.vertex_map[u], self.vertex_map[v]
            if not host.has_edge(hu, hv):
                return False
            realized.append((min(hu, hv), max(hu, hv)))
        return tuple(realized) == self.edge_list


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Distances from ``source``; ``math.inf`` for unreachable vertices."""
    dist: list[float] = [math.inf] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    """Shortest-path length, ``math.inf`` across components."""
    if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count):
        raise DomainError("vertex out of range")
    return bfs_distances(g, u)[v]


def square(g: Graph) -> Graph:
    """Join every pair of vertices at distance one or two."""
    edges = set(g.edges)
    for w in range(g.vertex_count):
        ns = g.neighbors(w)
        for i in range(len(ns)):
            for j in range(i + 1, len(ns)):
                edges.add((ns[i], ns[j]))
    return Graph(g.vertex_count, frozenset(edges))


def dfs_levels(g: Graph, root: int) -> dict[int, int]:
    """DFS-tree depth of every vertex, neighbors visited in ascending order.

    Raises DisconnectedGraph when some vertex is unreachable from ``root``.
    """
    if not 0 <= root < g.vertex_count:
        raise DomainError("root out of range")
    level: dict[int, int] = {root: 0}
    stack: list[tuple[int, Iterator[int]]] = [(root, iter(g.neighbors(root)))]
    while stack:
        u, it = stack[-1]
        advanced = False
        for w in it:
            if w not in level:
                level[w] = level[u] + 1
                stack.append((w, iter(g.neighbors(w))))
                advanced = True
                break
        if not advanced:
            stack.pop()
    if len(level) != g.vertex_count:
        raise DisconnectedGraph("graph is not connected from the given root")
    return level


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.vertex_count - len(connected_components(g))


def is_tree(g: Graph) -> bool:
    return g.vertex_count >= 1 and is_connected(g) and is_forest(g)


def is_path_graph(g: Graph) -> bool:
    return is_tree(g) and g.max_degree <= 2


def is_star_graph(g: Graph) -> bool:
    """K_{1,s}: a tree with at most one vertex of degree two or more."""
    if not is_tree(g):
        return False
    return sum(1 for v in range(g.vertex_count) if g.degree(v) >= 2) <= 1


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """BFS two-coloring per component; the smallest id of each component
    lands in part 0. Returns None when an odd cycle exists."""
    side: dict[int, int] = {}
    for comp in connected_components(g):
        start = comp[0]
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    part0 = frozenset(v for v, s in side.items() if s == 0)
    part1 = frozenset(v for v, s in side.items() if s == 1)
    return part0, part1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` re-indexed densely (ascending order).

    Returns the subgraph and the list mapping new ids back to originals.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.build(len(keep), edges), keep


def remove_vertex(g: Graph, v: int) -> Graph:
    """Delete ``v``; ids above it shift down by one."""
    if not 0 <= v < g.vertex_count:
        raise DomainError("vertex out of range")
    sub, _ = induced_subgraph(g, (u for u in range(g.vertex_count) if u != v))
    return sub


def _pattern_order(pattern: Graph) -> list[int]:
    """BFS order per component so each later vertex has an earlier neighbor
    whenever its component allows; components by smallest id."""
    order: list[int] = []
    placed = set()
    for comp in connected_components(pattern):
        queue = deque([comp[0]])
        placed.add(comp[0])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in pattern.neighbors(u):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    return order


def contains_subgraph(host: Graph, pattern: Graph,
                      budget: Budget | int | None = None) -> SubgraphWitness | None:
    """Exhaustive backtracking search for pattern as a (not necessarily
    induced) subgraph of host, with degree pruning.

    Deterministic: candidates are tried in ascending host-vertex order, so the
    returned witness is the lexicographically first embedding along the fixed
    pattern order. Raises SearchBudgetExceeded when a budget is given and hit.
    """
    bud = as_budget(budget)
    if pattern.vertex_count > host.vertex_count:
        return None
    order = _pattern_order(pattern)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(idx: int) -> bool:
        if idx == len(order):
            return True
        p = order[idx]
        mapped_nbrs = [mapping[q] for q in pattern.neighbors(p) if q in mapping]
        if mapped_nbrs:
            candidates = set(host.neighbors(mapped_nbrs[0]))
            for h in mapped_nbrs[1:]:
                candidates &= set(host.neighbors(h))
            candidates = sorted(candidates)
        else:
            candidates = range(host.vertex_count)
        pdeg = pattern.degree(p)
        for c in candidates:
            if c in used or host.degree(c) < pdeg:
                continue
            if bud is not None:
                bud.spend()
            mapping[p] = c
            used.add(c)
            if extend(idx + 1):
                return True
            del mapping[p]
            used.discard(c)
        return False

    if not extend(0):
        return None
    realized = tuple((min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
                     for u, v in pattern.edge_list)
    return SubgraphWitness(dict(mapping), realized)
