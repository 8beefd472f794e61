"""Independent brute-force oracles used to certify the library's answers.

These deliberately avoid the library's search code paths: subgraph
containment enumerates every injection, coloring validity enumerates every
color pair subgraph directly.
"""
from __future__ import annotations

import itertools

from starcolor.graphs import Graph


def naive_contains(host: Graph, pattern: Graph) -> bool:
    """Check every injection of pattern vertices into host vertices."""
    hv = range(host.vertex_count)
    for perm in itertools.permutations(hv, pattern.vertex_count):
        if all(host.has_edge(perm[u], perm[v]) for u, v in pattern.edge_list):
            return True
    return False


def naive_has_bicolored(g: Graph, colors: tuple[int, ...], pattern: Graph) -> bool:
    """Any two color classes whose union contains the pattern?"""
    used = sorted(set(colors))
    for c1, c2 in itertools.combinations(used, 2):
        verts = [v for v in range(g.vertex_count) if colors[v] in (c1, c2)]
        keep = set(verts)
        edges = [(u, v) for u, v in g.edge_list if u in keep and v in keep]
        index = {v: i for i, v in enumerate(verts)}
        sub = Graph.build(len(verts), [(index[u], index[v]) for u, v in edges])
        if naive_contains(sub, pattern):
            return True
    return False


def naive_is_proper(g: Graph, colors: tuple[int, ...]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edge_list)


def naive_star_chromatic(g: Graph, p4: Graph, max_k: int) -> int:
    """Smallest k over all k^n colorings that is proper with no bicolored
    4-path; exponential, for tiny graphs only."""
    n = g.vertex_count
    for k in range(1, max_k + 1):
        for assignment in itertools.product(range(1, k + 1), repeat=n):
            if not naive_is_proper(g, assignment):
                continue
            if not naive_has_bicolored(g, assignment, p4):
                return k
    raise AssertionError("no coloring found within max_k")


def naive_skeleton_exists(h_edges: list[frozenset[int]], n_verts: int,
                          pattern: Graph) -> bool:
    """Try every vertex injection and every edge injection."""
    pe = pattern.edge_list
    if len(pe) > len(h_edges) or pattern.vertex_count > n_verts:
        return False
    for vperm in itertools.permutations(range(n_verts), pattern.vertex_count):
        for eperm in itertools.permutations(range(len(h_edges)), len(pe)):
            ok = True
            for (u, v), idx in zip(pe, eperm):
                if not {vperm[u], vperm[v]} <= h_edges[idx]:
                    ok = False
                    break
            if ok:
                return True
    return False
