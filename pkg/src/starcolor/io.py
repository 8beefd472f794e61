"""Text formats shared by the CLI, the service, and test corpora.

Edge list:   '#' comment lines, then `p <vertex_count>`, then `u v` lines.
Hypergraph:  '#' comments, `p <vertex_count>`, then one hyperedge per line.
Coloring:    '#' comments, `v c` lines, every vertex exactly once.
Experiments: top-level `key = value` lines, then one `[run]` block per run.
"""
from __future__ import annotations

from .colorings import Coloring
from .errors import GraphFormatError
from .graphs import Graph
from .hypergraphs import Hypergraph


def _data_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    return lines


def parse_edge_list(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise GraphFormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "p":
        raise GraphFormatError(f"expected 'p <vertex_count>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad vertex count {head[1]!r}") from exc
    if n < 0:
        raise GraphFormatError("vertex count must be nonnegative")
    seen: set[tuple[int, int]] = set()
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {line!r}") from exc
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for {n} vertices")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append(key)
    return Graph.build(n, edges)


def format_edge_list(g: Graph, comments: tuple[str, ...] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"p {g.vertex_count}")
    out.extend(f"{u} {v}" for u, v in g.edge_list)
    return "\n".join(out) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _data_lines(text)
    if not lines:
        raise GraphFormatError("empty hypergraph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "p":
        raise GraphFormatError(f"expected 'p <vertex_count>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad vertex count {head[1]!r}") from exc
    edges = []
    for line in lines[1:]:
        try:
            verts = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise GraphFormatError(f"bad hyperedge line {line!r}") from exc
        if any(not 0 <= v < n for v in verts):
            raise GraphFormatError(f"hyperedge vertex out of range in {line!r}")
        edges.append(frozenset(verts))
    return Hypergraph(n, tuple(edges))


def format_hypergraph(h: Hypergraph, comments: tuple[str, ...] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"p {h.vertex_count}")
    out.extend(" ".join(str(v) for v in sorted(e)) for e in h.edges)
    return "\n".join(out) + "\n"


def parse_coloring(text: str, vertex_count: int) -> Coloring:
    lines = _data_lines(text)
    assigned: dict[int, int] = {}
    for line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'v c', got {line!r}")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad coloring line {line!r}") from exc
        if not 0 <= v < vertex_count:
            raise GraphFormatError(f"vertex {v} out of range")
        if c < 1:
            raise GraphFormatError(f"color {c} must be positive")
        if v in assigned:
            raise GraphFormatError(f"vertex {v} colored twice")
        assigned[v] = c
    if len(assigned) != vertex_count:
        missing = sorted(set(range(vertex_count)) - set(assigned))
        raise GraphFormatError(f"vertices missing a color: {missing[:5]}")
    return Coloring(tuple(assigned[v] for v in range(vertex_count)))


def format_coloring(c: Coloring, comments: tuple[str, ...] = ()) -> str:
    out = [f"# {line}" for line in comments]
    out.extend(f"{v} {col}" for v, col in enumerate(c.colors))
    return "\n".join(out) + "\n"


def parse_experiment_config(text: str) -> tuple[dict[str, str], list[dict[str, str]]]:
    """Flat `key = value` config: top-level settings, then `[run]` blocks."""
    top: dict[str, str] = {}
    runs: list[dict[str, str]] = []
    current = top
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "[run]":
            current = {}
            runs.append(current)
            continue
        if line.startswith("["):
            raise GraphFormatError(f"unknown section {line!r}")
        if "=" not in line:
            raise GraphFormatError(f"expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        current[key.strip()] = value.strip()
    return top, runs
