"""Forest predicates and tree surgery around the even-distance condition.

A "big" vertex has degree at least 3. The central condition on a forest is
that every pair of big vertices (within one component) lies at even distance.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ConditionViolated, InternalInvariant, NotApplicable, TooSmall
from .graphs import (
    Graph,
    bfs_distances,
    connected_components,
    is_forest,
    is_path_graph,
    is_star_graph,
    is_tree,
    remove_vertex,
)


@dataclass(frozen=True)
class ForestProfile:
    is_forest: bool
    big_vertices: frozenset[int]
    condition_holds: bool
    failing_pair: tuple[int, int, int] | None  # (u, v, distance)


def big_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.vertex_count) if g.degree(v) >= 3)


def profile_forest(f: Graph) -> ForestProfile:
    """Check acyclicity and the even-distance condition over big-vertex pairs.

    Pairs in different components are at infinite distance and count as
    satisfying the condition. The failing pair, when present, is the
    lexicographically least violating (u, v) with u < v.
    """
    big = sorted(big_vertices(f))
    failing = None
    dist_cache: dict[int, list[float]] = {}
    for i, u in enumerate(big):
        if u not in dist_cache:
            dist_cache[u] = bfs_distances(f, u)
        for v in big[i + 1:]:
            d = dist_cache[u][v]
            if d != float("inf") and int(d) % 2 == 1:
                failing = (u, v, int(d))
                break
        if failing:
            break
    return ForestProfile(
        is_forest=is_forest(f),
        big_vertices=frozenset(big),
        condition_holds=failing is None,
        failing_pair=failing,
    )


def _path_endpoints(f: Graph, comp: list[int]) -> tuple[int, int]:
    """(start, end) of a path component; start is the smallest-id endpoint."""
    ends = [v for v in comp if len([w for w in f.neighbors(v) if w in set(comp)]) <= 1]
    if len(comp) == 1:
        return comp[0], comp[0]
    ends.sort()
    return ends[0], ends[1]


def embed_in_even_tree(f: Graph) -> Graph:
    """Embed a condition-satisfying forest into one tree that still satisfies
    the even-distance condition.

    Rule: with no big vertex anywhere, concatenate the path components
    end-to-end. Otherwise anchor at the smallest-id big vertex of the first
    big-vertex component; path components hang off the anchor by an edge from
    their smallest-id endpoint, and every other big-vertex component is joined
    to the anchor through a fresh degree-2 vertex reaching that component's
    smallest-id big vertex.
    """
    prof = profile_forest(f)
    if not (prof.is_forest and prof.condition_holds):
        raise ConditionViolated("input is not a forest satisfying the even-distance condition")
    comps = connected_components(f)
    big = prof.big_vertices
    big_comps = [c for c in comps if any(v in big for v in c)]
    path_comps = [c for c in comps if not any(v in big for v in c)]

    edges = set(f.edges)
    if not big_comps:
        prev_end = None
        for comp in path_comps:
            start, end = _path_endpoints(f, comp)
            if prev_end is not None:
                edges.add((min(prev_end, start), max(prev_end, start)))
            prev_end = end
        return Graph(f.vertex_count, frozenset(edges), f.labels)

    anchor = min(v for v in big_comps[0] if v in big)
    for comp in path_comps:
        start, _ = _path_endpoints(f, comp)
        edges.add((min(anchor, start), max(anchor, start)))
    n = f.vertex_count
    for comp in big_comps[1:]:
        target = min(v for v in comp if v in big)
        fresh = n
        n += 1
        edges.add((min(anchor, fresh), max(anchor, fresh)))
        edges.add((min(fresh, target), max(fresh, target)))
    return Graph(n, frozenset(edges))


@dataclass(frozen=True)
class TStar:
    """The derived tree plus the map from its dense ids back to the source tree."""

    graph: Graph
    to_tree: tuple[int, ...]


def compute_t_star(t: Graph) -> TStar:
    """Vertices: big vertices and vertices at even distance from one; edges:
    pairs at distance exactly two. Verified to be a tree."""
    if not is_tree(t):
        raise ConditionViolated("input must be a tree")
    prof = profile_forest(t)
    if not prof.condition_holds:
        raise ConditionViolated("even-distance condition fails")
    if not prof.big_vertices:
        raise NotApplicable("tree has no vertex of degree 3 or more")
    b0 = min(prof.big_vertices)
    dist = bfs_distances(t, b0)
    keep = sorted(v for v in range(t.vertex_count) if int(dist[v]) % 2 == 0)
    index = {v: i for i, v in enumerate(keep)}
    # in a tree, distance two <=> a common neighbor (no triangles)
    edges = set()
    for w in range(t.vertex_count):
        ns = [index[u] for u in t.neighbors(w) if u in index]
        for i in range(len(ns)):
            for j in range(i + 1, len(ns)):
                a, b = ns[i], ns[j]
                edges.add((min(a, b), max(a, b)))
    star = Graph(len(keep), frozenset(edges))
    if not is_tree(star):
        raise InternalInvariant("derived distance-2 graph is not a tree")
    return TStar(star, tuple(keep))


def prune_leaf(t: Graph) -> tuple[Graph, int, int]:
    """Remove one leaf under the deterministic rule: prefer the smallest-id
    leaf whose removal leaves a path or a star, else the smallest-id leaf.
    Returns (pruned tree, removed leaf, its neighbor); ids above the removed
    leaf shift down by one in the pruned tree."""
    if not is_tree(t):
        raise ConditionViolated("input must be a tree")
    if t.vertex_count < 2:
        raise TooSmall("need at least two vertices to prune")
    leaves = [v for v in range(t.vertex_count) if t.degree(v) == 1]
    chosen = None
    for leaf in leaves:
        candidate = remove_vertex(t, leaf)
        if is_path_graph(candidate) or is_star_graph(candidate):
            chosen = leaf
            break
    if chosen is None:
        chosen = leaves[0]
    neighbor = t.neighbors(chosen)[0]
    return remove_vertex(t, chosen), chosen, neighbor
