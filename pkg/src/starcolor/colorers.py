"""Constructive star colorers: square-greedy, DFS levels, the recursive
palette bound c for a tree pattern, and the recursive colorer for graphs
claimed to avoid that tree."""
from __future__ import annotations

from dataclasses import dataclass

from .colorings import Coloring, star_violation
from .errors import ConditionViolated, DomainError, InternalInvariant
from .graphs import (
    Graph,
    SubgraphWitness,
    connected_components,
    contains_subgraph,
    dfs_levels,
    induced_subgraph,
    is_connected,
    is_path_graph,
    is_star_graph,
    square,
)
from .hypergraphs import (
    SkeletonWitness,
    build_neighbor_hypergraph,
    q_bound,
    rainbow_coloring,
    rank,
)
from .trees import compute_t_star, profile_forest, prune_leaf


def color_square_greedy(g: Graph) -> Coloring:
    """Greedy proper coloring of the square, ascending vertex order.

    Always a valid star coloring (and 2-distance coloring); uses at most
    max_degree(g)^2 + 1 colors.
    """
    sq = square(g)
    colors = [0] * g.vertex_count
    for v in range(g.vertex_count):
        taken = {colors[u] for u in sq.neighbors(v) if u < v}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def color_dfs_levels(g: Graph) -> Coloring:
    """Color each vertex by its DFS-tree depth plus one, per component with
    the smallest-id vertex as root.

    Always a valid star coloring; on a graph with no k-vertex path the
    palette stays at most k - 1.
    """
    colors = [0] * g.vertex_count
    for comp in connected_components(g):
        sub, back = induced_subgraph(g, comp)
        levels = dfs_levels(sub, 0)
        for local, lvl in levels.items():
            colors[back[local]] = lvl + 1
    return Coloring(tuple(colors))


@dataclass(frozen=True)
class LevelRecord:
    """One step of the palette-bound recursion."""

    n: int
    max_degree: int
    kind: str  # "recurse" | "path" | "star"
    t_star_size: int | None
    d: int | None
    q: int | None
    c_at_level: int


@dataclass(frozen=True)
class BoundLedger:
    tree: Graph
    records: tuple[LevelRecord, ...]  # outermost first
    c_value: int


def c_bound(t: Graph) -> BoundLedger:
    """Recursive star-palette bound for graphs avoiding the tree ``t``.

    Base cases: a k-vertex path costs k - 1, a star with s leaves costs
    (s-1)^2 + 1. Otherwise prune a leaf by the deterministic rule and combine
    with the rainbow budget of the derived distance-2 tree.
    """
    prof = profile_forest(t)
    if not (prof.is_forest and is_connected(t) and prof.condition_holds):
        raise ConditionViolated("pattern must be a tree satisfying the even-distance condition")
    if t.vertex_count < 2:
        raise DomainError("pattern must have at least two vertices")

    records: list[LevelRecord] = []

    def rec(tree: Graph) -> int:
        n = tree.vertex_count
        if is_path_graph(tree):
            c = n - 1
            records.append(LevelRecord(n, tree.max_degree, "path", None, None, None, c))
            return c
        if is_star_graph(tree):
            s = n - 1
            c = (s - 1) ** 2 + 1
            records.append(LevelRecord(n, tree.max_degree, "star", None, None, None, c))
            return c
        tstar = compute_t_star(tree)
        k = tstar.graph.vertex_count
        d = k * tree.max_degree + n
        q = q_bound(k, d)
        pruned, _, _ = prune_leaf(tree)
        c = rec(pruned) * q + d * d + 1
        records.append(LevelRecord(n, tree.max_degree, "recurse", k, d, q, c))
        return c

    value = rec(t)
    return BoundLedger(t, tuple(reversed(records)), value)


@dataclass(frozen=True)
class BigSmallSplit:
    threshold: int
    v_big: frozenset[int]
    v_small: frozenset[int]


@dataclass(frozen=True)
class TFreeColoring:
    coloring: Coloring
    ledger: BoundLedger


@dataclass(frozen=True)
class NotTFreeReport:
    """Evidence that the input graph is not free of the tree pattern.

    ``skeleton`` (when present) lives on big-side graph vertex ids;
    ``skeleton_smalls`` are the small vertices realizing its hyperedges.
    ``t_witness`` embeds the full tree in the graph when extraction
    succeeded; ``incomplete`` marks a skeleton whose expansion to a full
    tree witness could not be finished.
    """

    reason: str
    skeleton: SkeletonWitness | None = None
    skeleton_smalls: tuple[int, ...] | None = None
    t_witness: SubgraphWitness | None = None
    incomplete: bool = False


def _remap_report(report: NotTFreeReport, back: list[int]) -> NotTFreeReport:
    skeleton = report.skeleton
    if skeleton is not None:
        skeleton = SkeletonWitness({p: back[v] for p, v in skeleton.vertex_map.items()},
                                   dict(skeleton.edge_map), skeleton.mode)
    smalls = report.skeleton_smalls
    if smalls is not None:
        smalls = tuple(back[x] for x in smalls)
    tw = report.t_witness
    if tw is not None:
        tw = SubgraphWitness({p: back[v] for p, v in tw.vertex_map.items()},
                             tuple((min(back[a], back[b]), max(back[a], back[b]))
                                   for a, b in tw.edge_list))
    return NotTFreeReport(report.reason, skeleton, smalls, tw, report.incomplete)


def _expand_skeleton(g: Graph, t: Graph, skel_g: SkeletonWitness,
                     smalls: tuple[int, ...]) -> tuple[SubgraphWitness | None, bool]:
    """Turn a skeleton (already in g's vertex ids) into a full tree witness:
    give each skeleton vertex a private bundle of fresh neighbors, then embed
    the tree inside the assembled vertex set."""
    core = set(skel_g.vertex_map.values()) | set(smalls)
    bundle = t.max_degree
    chosen: set[int] = set()
    for v in sorted(skel_g.vertex_map.values()):
        fresh = [u for u in g.neighbors(v) if u not in core and u not in chosen][:bundle]
        if len(fresh) < bundle:
            return None, True
        chosen.update(fresh)
    sub, back = induced_subgraph(g, core | chosen)
    w = contains_subgraph(sub, t)
    if w is None:
        return None, True
    vm = {p: back[v] for p, v in w.vertex_map.items()}
    el = tuple((min(back[a], back[b]), max(back[a], back[b])) for a, b in w.edge_list)
    return SubgraphWitness(vm, el), False


def color_star_tfree(g: Graph, t: Graph) -> TFreeColoring | NotTFreeReport:
    """Star-color a graph assumed to avoid the tree ``t``.

    Either returns a validated star coloring using at most the recursive
    bound, or a report showing the graph contains ``t`` (a skeleton from the
    rainbow step, expanded to a tree embedding when possible, or a failed
    final validation). Success is possible on graphs that do contain ``t``;
    the guarantee is only one-directional, matching the bound's contract.
    """
    ledger = c_bound(t)  # also validates t

    result = _color(g, t)
    if isinstance(result, NotTFreeReport):
        return result
    violation = star_violation(g, result)
    if violation is not None or result.palette_size > ledger.c_value:
        return NotTFreeReport(
            reason="final validation failed: "
            + ("bicolored 4-path present" if violation is not None
               else f"palette {result.palette_size} exceeds bound {ledger.c_value}"))
    return TFreeColoring(result, ledger)


def _color(g: Graph, t: Graph) -> Coloring | NotTFreeReport:
    if is_path_graph(t):
        return color_dfs_levels(g)
    if is_star_graph(t):
        return color_square_greedy(g)

    n = t.vertex_count
    tstar = compute_t_star(t)
    k = tstar.graph.vertex_count
    d = k * t.max_degree + n
    q = q_bound(k, d)
    v_big = [v for v in range(g.vertex_count) if g.degree(v) > d]
    v_small = [v for v in range(g.vertex_count) if g.degree(v) <= d]

    small_graph, small_back = induced_subgraph(g, v_small)
    phi_s = color_square_greedy(small_graph)
    if phi_s.palette_size > d * d + 1:
        raise InternalInvariant("small-side palette exceeded its guarantee")

    pruned, _, _ = prune_leaf(t)
    big_graph, big_back = induced_subgraph(g, v_big)
    sub_result = _color(big_graph, pruned)
    if isinstance(sub_result, NotTFreeReport):
        return _remap_report(sub_result, big_back)
    phi_b1 = sub_result

    nh = build_neighbor_hypergraph(g, v_big, v_small)
    if rank(nh.simplified) > d:
        raise InternalInvariant("hypergraph rank exceeds the degree threshold")
    rainbow = rainbow_coloring(nh.simplified, tstar.graph)
    if isinstance(rainbow, SkeletonWitness):
        skel_g = SkeletonWitness(
            {p: nh.big_vertices[v] for p, v in rainbow.vertex_map.items()},
            dict(rainbow.edge_map), rainbow.mode)
        prov = nh.simplified.provenance or {}
        smalls = tuple(prov[idx] for idx in rainbow.edge_map.values())
        t_witness, incomplete = _expand_skeleton(g, t, skel_g, smalls)
        return NotTFreeReport("rainbow step found a tree skeleton",
                              skel_g, smalls, t_witness, incomplete)
    if rainbow.palette_size > q:
        raise InternalInvariant("rainbow palette exceeded its guarantee")

    colors = [0] * g.vertex_count
    pairs: dict[int, tuple[int, int]] = {}
    for i, v in enumerate(small_back):
        colors[v] = phi_s.colors[i]
    block = d * d + 1
    for i, v in enumerate(big_back):
        a = phi_b1.colors[i]
        b = rainbow.colors[i]  # big_back and hypergraph ids share sorted order
        colors[v] = block + (a - 1) * q + b
        pairs[v] = (a, b)
    return Coloring(tuple(colors), pairs)
