"""Exact chromatic numbers under each coloring mode, by branch and bound in
degeneracy order, plus exhaustive enumeration of proper colorings."""
from __future__ import annotations

from dataclasses import dataclass

from .colorings import Coloring, find_bicolored
from .errors import Budget, DomainError, ExceedsMaxK, as_budget
from .graphs import Graph, contains_subgraph, induced_subgraph, is_connected, square

PROPER = "proper"
STAR = "star"
ACYCLIC = "acyclic"
DIST2 = "dist2"
AVOID = "avoid"


@dataclass(frozen=True)
class ColoringMode:
    kind: str
    pattern: Graph | None = None

    def __post_init__(self) -> None:
        if self.kind not in (PROPER, STAR, ACYCLIC, DIST2, AVOID):
            raise DomainError(f"unknown mode {self.kind!r}")
        if self.kind == AVOID:
            if self.pattern is None or not is_connected(self.pattern):
                raise DomainError("avoid mode needs a connected pattern")
        elif self.pattern is not None:
            raise DomainError(f"mode {self.kind!r} takes no pattern")

    @staticmethod
    def proper() -> "ColoringMode":
        return ColoringMode(PROPER)

    @staticmethod
    def star() -> "ColoringMode":
        return ColoringMode(STAR)

    @staticmethod
    def acyclic() -> "ColoringMode":
        return ColoringMode(ACYCLIC)

    @staticmethod
    def dist2() -> "ColoringMode":
        return ColoringMode(DIST2)

    @staticmethod
    def avoid(pattern: Graph) -> "ColoringMode":
        return ColoringMode(AVOID, pattern)


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (smallest id first); the
    returned order is the reverse, so earlier vertices have few later ones."""
    degs = [g.degree(v) for v in range(g.vertex_count)]
    alive = set(range(g.vertex_count))
    removal = []
    while alive:
        v = min(alive, key=lambda u: (degs[u], u))
        removal.append(v)
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                degs[w] -= 1
    return list(reversed(removal))


def _proper_ok(g: Graph, colors: dict[int, int], v: int) -> bool:
    return all(colors.get(u) != colors[v] for u in g.neighbors(v))


def _star_ok(g: Graph, colors: dict[int, int], v: int) -> bool:
    # any new bicolored 4-path must pass through v; enumerate those
    for b, c in g.edge_list:
        if b not in colors or c not in colors:
            continue
        for x, y in ((b, c), (c, b)):
            for a in g.neighbors(x):
                if a == y or a not in colors:
                    continue
                for d in g.neighbors(y):
                    if d == x or d == a or d not in colors:
                        continue
                    if v not in (a, x, y, d):
                        continue
                    if len({colors[a], colors[x], colors[y], colors[d]}) == 2:
                        return False
    return True


def _acyclic_ok(g: Graph, colors: dict[int, int], v: int) -> bool:
    # a new bicolored cycle must pass through v: look for two neighbors of v
    # in the two-color subgraph connected to each other while avoiding v
    cv = colors[v]
    other = {colors[u] for u in colors if colors[u] != cv}
    for c2 in sorted(other):
        allowed = {u for u in colors if colors[u] in (cv, c2) and u != v}
        starts = [u for u in g.neighbors(v) if u in allowed]
        if len(starts) < 2:
            continue
        comp: dict[int, int] = {}
        for root in starts:
            if root in comp:
                continue
            comp[root] = root
            stack = [root]
            while stack:
                u = stack.pop()
                for w in g.neighbors(u):
                    if w in allowed and w not in comp:
                        comp[w] = root
                        stack.append(w)
        if len({comp[s] for s in starts}) < len(starts):
            return False
    return True


def _avoid_ok(g: Graph, colors: dict[int, int], v: int, pattern: Graph,
              bud: Budget | None) -> bool:
    cv = colors[v]
    other = sorted({colors[u] for u in colors if colors[u] != cv})
    for c2 in other:
        verts = [u for u in colors if colors[u] in (cv, c2)]
        sub, _ = induced_subgraph(g, verts)
        if contains_subgraph(sub, pattern, bud) is not None:
            return False
    return True


def exact_chromatic(g: Graph, mode: ColoringMode, max_k: int,
                    budget: Budget | int | None = None) -> tuple[int, Coloring]:
    """Smallest palette admitting a valid mode-coloring, with an optimal
    coloring. Color symmetry is broken by only opening one fresh color at a
    time. Raises ExceedsMaxK or SearchBudgetExceeded."""
    if max_k < 1:
        raise DomainError("max_k must be at least 1")
    bud = as_budget(budget)
    order = degeneracy_order(g)
    sq = square(g) if mode.kind == DIST2 else None

    def ok(colors: dict[int, int], v: int) -> bool:
        if not _proper_ok(g, colors, v):
            return False
        if mode.kind == PROPER:
            return True
        if mode.kind == DIST2:
            return _proper_ok(sq, colors, v)  # type: ignore[arg-type]
        if mode.kind == STAR:
            return _star_ok(g, colors, v)
        if mode.kind == ACYCLIC:
            return _acyclic_ok(g, colors, v)
        return _avoid_ok(g, colors, v, mode.pattern, bud)  # type: ignore[arg-type]

    def solve(k: int) -> dict[int, int] | None:
        colors: dict[int, int] = {}

        def extend(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            for c in range(1, min(used + 1, k) + 1):
                if bud is not None:
                    bud.spend()
                colors[v] = c
                if ok(colors, v) and extend(i + 1, max(used, c)):
                    return True
                del colors[v]
            return False

        return dict(colors) if extend(0, 0) else None

    for k in range(1, max_k + 1):
        found = solve(k)
        if found is not None:
            tup = tuple(found[v] for v in range(g.vertex_count))
            return k, Coloring(tup)
    raise ExceedsMaxK(f"no valid coloring with at most {max_k} colors")


def all_colorings_have_bicolored(g: Graph, k: int, h: Graph,
                                 budget: Budget | int | None = None) -> tuple[bool, int]:
    """Enumerate proper colorings with at most k colors up to color
    permutation; report whether every one contains a bicolored copy of ``h``
    and how many colorings were inspected."""
    if k < 1:
        raise DomainError("k must be at least 1")
    bud = as_budget(budget)
    inspected = 0
    colors: dict[int, int] = {}

    def extend(v: int, used: int) -> bool:
        nonlocal inspected
        if v == g.vertex_count:
            inspected += 1
            c = Coloring(tuple(colors[u] for u in range(g.vertex_count)))
            return find_bicolored(g, c, h, bud) is not None
        for c in range(1, min(used + 1, k) + 1):
            if bud is not None:
                bud.spend()
            if any(colors.get(u) == c for u in g.neighbors(v)):
                continue
            colors[v] = c
            if not extend(v + 1, max(used, c)):
                return False
            del colors[v]
        return True

    return extend(0, 0), inspected
