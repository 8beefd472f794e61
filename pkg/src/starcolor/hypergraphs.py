"""Simple hypergraphs: nested-edge simplification, tree-skeleton search
(greedy and exhaustive), rainbow coloring, and the closed-form degree/palette
bounds they revolve around."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .colorings import Coloring
from .errors import (
    Budget,
    DomainError,
    InternalInvariant,
    PreconditionViolated,
    as_budget,
)
from .graphs import Edge, Graph, _pattern_order, is_tree

WEAK = "weak"
STRICT = "strict"


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set 0..vertex_count-1 with a list of hyperedges.

    ``provenance`` optionally tags hyperedge indices with the external object
    (e.g. the low-degree graph vertex) that generated them.
    """

    vertex_count: int
    edges: tuple[frozenset[int], ...]
    provenance: dict[int, Hashable] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise DomainError("vertex_count must be nonnegative")
        for e in self.edges:
            for v in e:
                if not 0 <= v < self.vertex_count:
                    raise DomainError(f"hyperedge vertex {v} out of range")

    @staticmethod
    def build(vertex_count: int, edges: Iterable[Iterable[int]],
              provenance: dict[int, Hashable] | None = None) -> "Hypergraph":
        return Hypergraph(vertex_count, tuple(frozenset(e) for e in edges), provenance)


def degree(h: Hypergraph, v: int) -> int:
    return sum(1 for e in h.edges if v in e)


def min_degree(h: Hypergraph) -> int:
    if h.vertex_count == 0:
        return 0
    return min(degree(h, v) for v in range(h.vertex_count))


def rank(h: Hypergraph) -> int:
    return max((len(e) for e in h.edges), default=0)


def is_simplified(h: Hypergraph) -> bool:
    """No nested or duplicate hyperedges and none of size <= 1."""
    for i, e in enumerate(h.edges):
        if len(e) <= 1:
            return False
        for j, f in enumerate(h.edges):
            if i != j and e <= f and not (e == f and i < j):
                return False
    return True


def _simplify_edge_sets(edges: list[frozenset[int]]) -> list[int]:
    """Indices of surviving edges: maximal, deduplicated (first wins),
    size >= 2; original order preserved."""
    keep: list[int] = []
    for i, e in enumerate(edges):
        if len(e) <= 1:
            continue
        dominated = False
        for j, f in enumerate(edges):
            if i == j:
                continue
            if e < f or (e == f and j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    return keep


def simplify(h: Hypergraph) -> Hypergraph:
    """Drop hyperedges of size <= 1 and every hyperedge contained in another;
    duplicates collapse to their first occurrence, which keeps its tag."""
    edges = list(h.edges)
    keep = _simplify_edge_sets(edges)
    prov = None
    if h.provenance is not None:
        prov = {new: h.provenance[old] for new, old in enumerate(keep) if old in h.provenance}
    return Hypergraph(h.vertex_count, tuple(edges[i] for i in keep), prov)


def p_bound(n: int) -> int:
    """Minimum-degree threshold that forces an n-vertex tree skeleton."""
    if n < 2:
        raise DomainError("p_bound requires n >= 2")
    if n == 2:
        return 1
    return math.comb(n - 2, math.ceil((n - 2) / 2)) + n - 1


def q_bound(n: int, r: int) -> int:
    """Rainbow palette that suffices for rank-r hypergraphs with no n-vertex
    tree skeleton."""
    if n < 2 or r < 2:
        raise DomainError("q_bound requires n >= 2 and r >= 2")
    return (p_bound(n) - 1) * (r - 1) + 1


@dataclass(frozen=True)
class SkeletonWitness:
    """Injections: pattern vertices -> hypergraph vertices and pattern edges
    -> hyperedge indices, each hyperedge containing its edge's endpoint
    images. Strict mode additionally forbids selected hyperedges from
    containing non-edge image pairs."""

    vertex_map: dict[int, int]
    edge_map: dict[Edge, int]
    mode: str = WEAK


def validate_skeleton(h: Hypergraph, pattern: Graph, w: SkeletonWitness) -> bool:
    if set(w.vertex_map) != set(range(pattern.vertex_count)):
        return False
    if len(set(w.vertex_map.values())) != len(w.vertex_map):
        return False
    if set(w.edge_map) != set(pattern.edge_list):
        return False
    if len(set(w.edge_map.values())) != len(w.edge_map):
        return False
    for (u, v), idx in w.edge_map.items():
        if not 0 <= idx < len(h.edges):
            return False
        if not {w.vertex_map[u], w.vertex_map[v]} <= h.edges[idx]:
            return False
    if w.mode == STRICT:
        selected = set(w.edge_map.values())
        n = pattern.vertex_count
        for u in range(n):
            for v in range(u + 1, n):
                if pattern.has_edge(u, v):
                    continue
                pair = {w.vertex_map[u], w.vertex_map[v]}
                if any(pair <= h.edges[idx] for idx in selected):
                    return False
    return True


def _tree_grow_order(t: Graph) -> list[int]:
    order = _pattern_order(t)
    return order


def find_skeleton_greedy(h: Hypergraph, t: Graph) -> SkeletonWitness:
    """Grow the tree leaf by leaf, always taking the smallest-index unused
    hyperedge through the attachment point that still has a fresh vertex.

    Guaranteed to succeed when the hypergraph is simplified and its minimum
    degree reaches the p-threshold for the tree's order.
    """
    if not is_tree(t) or t.vertex_count < 2:
        raise DomainError("pattern must be a tree with at least two vertices")
    if not is_simplified(h):
        raise DomainError("hypergraph must be simplified (no nested or tiny edges)")
    n = t.vertex_count
    need = p_bound(n)
    for v in range(h.vertex_count):
        if degree(h, v) < need:
            raise PreconditionViolated(
                f"vertex {v} has degree {degree(h, v)} < p({n}) = {need}", vertex=v)
    order = _tree_grow_order(t)
    vmap: dict[int, int] = {}
    emap: dict[Edge, int] = {}
    used_edges: set[int] = set()
    used_verts: set[int] = set()

    v1, v2 = order[0], order[1]
    base = next((i for i, e in enumerate(h.edges) if len(e) >= 2), None)
    if base is None:
        raise InternalInvariant("no usable hyperedge despite degree precondition")
    a, b = sorted(h.edges[base])[:2]
    vmap[v1], vmap[v2] = a, b
    used_verts.update((a, b))
    emap[(min(v1, v2), max(v1, v2))] = base
    used_edges.add(base)

    for leaf in order[2:]:
        parent = next(q for q in t.neighbors(leaf) if q in vmap)
        placed = False
        for idx, e in enumerate(h.edges):
            if idx in used_edges or vmap[parent] not in e:
                continue
            fresh = sorted(e - used_verts)
            if not fresh:
                continue
            vmap[leaf] = fresh[0]
            used_verts.add(fresh[0])
            emap[(min(leaf, parent), max(leaf, parent))] = idx
            used_edges.add(idx)
            placed = True
            break
        if not placed:
            raise InternalInvariant("greedy growth stuck despite degree precondition")
    return SkeletonWitness(vmap, emap, WEAK)


def find_skeleton_exhaustive(h: Hypergraph, pattern: Graph, mode: str = WEAK,
                             budget: Budget | int | None = None) -> SkeletonWitness | None:
    """Backtracking over vertex and hyperedge injections; returns the first
    witness in ascending candidate order, or None."""
    if mode not in (WEAK, STRICT):
        raise DomainError(f"unknown skeleton mode {mode!r}")
    bud = as_budget(budget)
    if pattern.vertex_count > h.vertex_count or len(pattern.edges) > len(h.edges):
        return None
    order = _pattern_order(pattern)
    # interleave: place a vertex, then bind each pattern edge back to an
    # already-placed endpoint
    slots: list[tuple[str, object]] = []
    placed: list[int] = []
    for p in order:
        slots.append(("v", p))
        for q in placed:
            if pattern.has_edge(p, q):
                slots.append(("e", (min(p, q), max(p, q))))
        placed.append(p)
    vmap: dict[int, int] = {}
    emap: dict[Edge, int] = {}
    used_v: set[int] = set()
    used_e: set[int] = set()

    def strict_ok() -> bool:
        selected = set(emap.values())
        n = pattern.vertex_count
        for u in range(n):
            for v in range(u + 1, n):
                if pattern.has_edge(u, v):
                    continue
                pair = {vmap[u], vmap[v]}
                if any(pair <= h.edges[idx] for idx in selected):
                    return False
        return True

    def extend(i: int) -> bool:
        if i == len(slots):
            return mode == WEAK or strict_ok()
        kind, payload = slots[i]
        if kind == "v":
            p = payload
            for cand in range(h.vertex_count):
                if cand in used_v:
                    continue
                if bud is not None:
                    bud.spend()
                vmap[p] = cand  # type: ignore[index]
                used_v.add(cand)
                if extend(i + 1):
                    return True
                del vmap[p]  # type: ignore[arg-type]
                used_v.discard(cand)
            return False
        u, v = payload  # type: ignore[misc]
        pair = {vmap[u], vmap[v]}
        for idx, e in enumerate(h.edges):
            if idx in used_e or not pair <= e:
                continue
            if bud is not None:
                bud.spend()
            emap[(u, v)] = idx
            used_e.add(idx)
            if extend(i + 1):
                return True
            del emap[(u, v)]
            used_e.discard(idx)
        return False

    if extend(0):
        return SkeletonWitness(dict(vmap), dict(emap), mode)
    return None


def rainbow_coloring(h: Hypergraph, t: Graph) -> Coloring | SkeletonWitness:
    """Peel low-degree vertices and color them greedily on the way back.

    If peeling ever gets stuck (every remaining vertex has degree at least
    the p-threshold), the greedy skeleton search must succeed there and its
    witness is returned instead, with vertex ids mapped back to ``h``.
    """
    if not is_tree(t) or t.vertex_count < 2:
        raise DomainError("pattern must be a tree with at least two vertices")
    if not is_simplified(h):
        raise DomainError("hypergraph must be simplified")
    n = t.vertex_count
    p = p_bound(n)
    r = max(rank(h), 2)
    q = q_bound(n, r)

    # edges travel as (index in h.edges, current shrunken vertex set) so a
    # witness found deep in the recursion can reference h's own hyperedges
    # (a shrunken edge is a subset of its original, so weak containment holds)
    def rec(active: list[int],
            edges: list[tuple[int, frozenset[int]]]) -> dict[int, int] | SkeletonWitness:
        if not active:
            return {}
        deg = {v: 0 for v in active}
        for _, e in edges:
            for v in e:
                deg[v] += 1
        victim = next((v for v in active if deg[v] <= p - 1), None)
        if victim is None:
            # minimum degree reached the threshold: a skeleton must exist
            index = {v: i for i, v in enumerate(active)}
            sub = Hypergraph(len(active),
                             tuple(frozenset(index[v] for v in e) for _, e in edges))
            w = find_skeleton_greedy(sub, t)
            back = {i: v for v, i in index.items()}
            return SkeletonWitness({pv: back[hv] for pv, hv in w.vertex_map.items()},
                                   {pe: edges[idx][0] for pe, idx in w.edge_map.items()},
                                   WEAK)
        neighbors = {u for _, e in edges if victim in e for u in e} - {victim}
        shrunk = [(orig, e - {victim}) for orig, e in edges]
        keep = _simplify_edge_sets([e for _, e in shrunk])
        rest = rec([v for v in active if v != victim], [shrunk[i] for i in keep])
        if isinstance(rest, SkeletonWitness):
            return rest
        taken = {rest[u] for u in neighbors}
        color = next((c for c in range(1, q + 1) if c not in taken), None)
        if color is None:
            raise InternalInvariant("rainbow palette exhausted below its guarantee")
        rest[victim] = color
        return rest

    result = rec(list(range(h.vertex_count)), list(enumerate(h.edges)))
    if isinstance(result, SkeletonWitness):
        return result
    return Coloring(tuple(result[v] for v in range(h.vertex_count)))


@dataclass(frozen=True)
class NeighborHypergraph:
    """Hypergraph of big-side neighborhoods seen from the small side."""

    raw: Hypergraph
    simplified: Hypergraph
    big_vertices: tuple[int, ...]  # dense hypergraph id -> original graph id


def build_neighbor_hypergraph(g: Graph, v_big: Iterable[int],
                              v_small: Iterable[int]) -> NeighborHypergraph:
    """One raw hyperedge per small vertex: its neighborhood inside the big
    side, re-indexed densely over the sorted big vertices."""
    big = sorted(set(v_big))
    small = sorted(set(v_small))
    if set(big) & set(small) or len(big) + len(small) != g.vertex_count:
        raise DomainError("v_big and v_small must partition the vertex set")
    index = {v: i for i, v in enumerate(big)}
    edges = []
    prov: dict[int, Hashable] = {}
    for x in small:
        edges.append(frozenset(index[u] for u in g.neighbors(x) if u in index))
        prov[len(edges) - 1] = x
    raw = Hypergraph(len(big), tuple(edges), prov)
    return NeighborHypergraph(raw, simplify(raw), tuple(big))
