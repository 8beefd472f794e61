"""Coloring model, validators (proper / pattern-avoiding / star / acyclic /
2-distance), and the bounded-class classifiers for patterns H and forbidden
subgraphs F."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import Budget, DisconnectedGraph, DomainError, SizeMismatch
from .graphs import (
    Edge,
    Graph,
    SubgraphWitness,
    contains_subgraph,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_forest,
    is_star_graph,
    square,
)
from .trees import ForestProfile, profile_forest


@dataclass(frozen=True)
class Coloring:
    """Total vertex -> color map; colors are positive integers.

    ``pairs`` optionally records the (block-1, block-2) product components a
    flattened color came from, for reporting only.
    """

    colors: tuple[int, ...]
    pairs: dict[int, tuple[int, int]] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        for c in self.colors:
            if c < 1:
                raise DomainError("colors must be positive integers")

    @property
    def palette_size(self) -> int:
        return max(self.colors, default=0)

    def color(self, v: int) -> int:
        return self.colors[v]


@dataclass(frozen=True)
class BicoloredWitness:
    color_pair: tuple[int, int]
    subgraph: SubgraphWitness  # vertex_map targets are host-graph ids


class HClass(enum.Enum):
    NOT_BIPARTITE = "not-bipartite"
    STAR = "star"
    DEG_TWO_PART = "deg-two-part"
    OTHER_BIPARTITE = "other-bipartite"


class Verdict(enum.Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ClassificationResult:
    verdict: Verdict
    reason: str
    profile: ForestProfile | None = None


def _check_size(g: Graph, c: Coloring) -> None:
    if len(c.colors) != g.vertex_count:
        raise SizeMismatch(f"coloring covers {len(c.colors)} vertices, graph has {g.vertex_count}")


def proper_violation(g: Graph, c: Coloring) -> Edge | None:
    """Smallest monochromatic edge, or None when the coloring is proper."""
    _check_size(g, c)
    for u, v in g.edge_list:
        if c.colors[u] == c.colors[v]:
            return (u, v)
    return None


def is_proper(g: Graph, c: Coloring) -> bool:
    return proper_violation(g, c) is None


def find_bicolored(g: Graph, c: Coloring, h: Graph,
                   budget: Budget | int | None = None) -> BicoloredWitness | None:
    """First bicolored copy of ``h`` in canonical order: ascending color
    pairs, then the lexicographically first embedding."""
    _check_size(g, c)
    if proper_violation(g, c) is not None:
        raise DomainError("bicolored-pattern search requires a proper coloring")
    if not is_connected(h):
        raise DisconnectedGraph("pattern must be connected")
    used = sorted(set(c.colors))
    for i, c1 in enumerate(used):
        for c2 in used[i + 1:]:
            verts = [v for v in range(g.vertex_count) if c.colors[v] in (c1, c2)]
            sub, back = induced_subgraph(g, verts)
            w = contains_subgraph(sub, h, budget)
            if w is not None:
                vm = {p: back[hv] for p, hv in w.vertex_map.items()}
                el = tuple((min(back[a], back[b]), max(back[a], back[b]))
                           for a, b in w.edge_list)
                return BicoloredWitness((c1, c2), SubgraphWitness(vm, el))
    return None


def star_violation(g: Graph, c: Coloring) -> BicoloredWitness | None:
    """Bicolored 4-path with the smallest (color pair, vertex tuple) key.

    Scans all paths a-b-c-d directly instead of running a pattern search per
    color pair; equivalent to find_bicolored with a 4-path but fast enough to
    validate large outputs.
    """
    _check_size(g, c)
    if proper_violation(g, c) is not None:
        raise DomainError("star validation requires a proper coloring")
    best = None
    for b, cc in g.edge_list:
        for x, y in ((b, cc), (cc, b)):
            for a in g.neighbors(x):
                if a == y:
                    continue
                for d in g.neighbors(y):
                    if d == x or d == a:
                        continue
                    cols = {c.colors[a], c.colors[x], c.colors[y], c.colors[d]}
                    if len(cols) != 2:
                        continue
                    path = (a, x, y, d) if (a, x, y, d) <= (d, y, x, a) else (d, y, x, a)
                    key = (tuple(sorted(cols)), path)
                    if best is None or key < best:
                        best = key
    if best is None:
        return None
    (c1, c2), (a, x, y, d) = best
    vm = {0: a, 1: x, 2: y, 3: d}
    el = tuple((min(p, q), max(p, q)) for p, q in ((a, x), (x, y), (y, d)))
    return BicoloredWitness((c1, c2), SubgraphWitness(vm, el))


def is_star_coloring(g: Graph, c: Coloring) -> bool:
    return is_proper(g, c) and star_violation(g, c) is None


def acyclic_violation(g: Graph, c: Coloring) -> list[int] | None:
    """A bicolored cycle (vertex list) for the smallest color pair, or None."""
    _check_size(g, c)
    if proper_violation(g, c) is not None:
        raise DomainError("acyclic validation requires a proper coloring")
    used = sorted(set(c.colors))
    for i, c1 in enumerate(used):
        for c2 in used[i + 1:]:
            verts = [v for v in range(g.vertex_count) if c.colors[v] in (c1, c2)]
            cycle = _find_cycle(g, verts)
            if cycle is not None:
                return cycle
    return None


def _find_cycle(g: Graph, verts: list[int]) -> list[int] | None:
    """DFS cycle search restricted to ``verts``; the DFS stack is the current
    path, so a back edge yields the cycle directly."""
    allowed = set(verts)
    visited: set[int] = set()
    for start in verts:
        if start in visited:
            continue
        visited.add(start)
        stack: list[tuple[int, int | None, "object"]] = [
            (start, None, iter(g.neighbors(start)))]
        on_path = {start: 0}
        while stack:
            u, pu, it = stack[-1]
            pushed = False
            for w in it:  # type: ignore[union-attr]
                if w not in allowed or w == pu:
                    continue
                if w in on_path:
                    return [frame[0] for frame in stack[on_path[w]:]]
                if w in visited:
                    continue
                visited.add(w)
                on_path[w] = len(stack)
                stack.append((w, u, iter(g.neighbors(w))))
                pushed = True
                break
            if not pushed:
                stack.pop()
                del on_path[u]
    return None


def is_acyclic_coloring(g: Graph, c: Coloring) -> bool:
    return is_proper(g, c) and acyclic_violation(g, c) is None


def dist2_violation(g: Graph, c: Coloring) -> Edge | None:
    """Equivalent to properness on the square of the graph."""
    _check_size(g, c)
    return proper_violation(square(g), c)


def is_dist2_coloring(g: Graph, c: Coloring) -> bool:
    return dist2_violation(g, c) is None


def classify_h(h: Graph) -> HClass:
    """Place a connected pattern H in the case analysis used by the
    bounded/unbounded characterizations."""
    if h.vertex_count < 2:
        raise DomainError("pattern must have at least two vertices")
    if not is_connected(h):
        raise DisconnectedGraph("pattern must be connected")
    parts = is_bipartite(h)
    if parts is None:
        return HClass.NOT_BIPARTITE
    if is_star_graph(h):
        return HClass.STAR
    p0, p1 = parts
    if all(h.degree(v) <= 2 for v in p0) or all(h.degree(v) <= 2 for v in p1):
        return HClass.DEG_TWO_PART
    return HClass.OTHER_BIPARTITE


def classify_f(f: Graph, hclass: HClass) -> ClassificationResult:
    """Decide whether F-free graphs have bounded H-avoiding chromatic number
    for patterns H in the given class."""
    prof = profile_forest(f)
    if hclass is HClass.OTHER_BIPARTITE:
        return ClassificationResult(Verdict.UNKNOWN,
                                    "no characterization known for this pattern class", prof)
    if hclass is HClass.NOT_BIPARTITE:
        # avoiding a non-2-colorable pattern is just proper coloring
        if prof.is_forest:
            return ClassificationResult(Verdict.BOUNDED, "F is a forest", prof)
        return ClassificationResult(Verdict.UNBOUNDED, "F is not a forest", prof)
    if hclass is HClass.STAR:
        if is_star_graph(f) and is_connected(f) and f.vertex_count >= 1:
            return ClassificationResult(Verdict.BOUNDED, "F is a star", prof)
        return ClassificationResult(Verdict.UNBOUNDED, "F is not a star", prof)
    # DEG_TWO_PART
    if not prof.is_forest:
        return ClassificationResult(Verdict.UNBOUNDED, "F is not a forest", prof)
    if prof.condition_holds:
        return ClassificationResult(
            Verdict.BOUNDED, "forest with all big-vertex pairs at even distance", prof)
    u, v, d = prof.failing_pair  # type: ignore[misc]
    return ClassificationResult(
        Verdict.UNBOUNDED, f"big vertices {u} and {v} at odd distance {d}", prof)
