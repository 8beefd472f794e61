"""Command-line surface: a thin client over the service layer.

Exit codes: 0 success / bounded / valid, 1 negative result, 2 unknown,
64 usage or parse errors, 65 budget exhausted.
"""
from __future__ import annotations

import sys
from pathlib import Path

import click

from .errors import (
    ConditionViolated,
    DisconnectedGraph,
    DomainError,
    GraphFormatError,
    NotApplicable,
    SearchBudgetExceeded,
    SizeMismatch,
    StarcolorError,
    TooSmall,
)
from .io import (
    format_coloring,
    format_edge_list,
    parse_coloring,
    parse_edge_list,
    parse_experiment_config,
)
from .service import (
    ClassifyRequest,
    ColorRequest,
    ExactRequest,
    GenerateRequest,
    GraphModel,
    ColoringModel,
    VerifyRequest,
    run_classify,
    run_color,
    run_exact,
    run_generate,
    run_verify,
)

EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_BUDGET = 65

_PARSE_ERRORS = (GraphFormatError, DomainError, DisconnectedGraph, SizeMismatch,
                 ConditionViolated, NotApplicable, TooSmall)


def _read_graph(path: str) -> GraphModel:
    return GraphModel.from_graph(parse_edge_list(Path(path).read_text()))


@click.group()
def main() -> None:
    """Star / acyclic / pattern-avoiding coloring toolkit."""


@main.command()
@click.option("--f", "f_path", required=True, help="forbidden subgraph file")
@click.option("--h", "h_path", required=True, help="avoided pattern file")
def classify(f_path: str, h_path: str) -> None:
    """Decide whether F-free graphs have bounded H-avoiding chromatic number."""
    try:
        resp = run_classify(ClassifyRequest(forbidden=_read_graph(f_path),
                                            pattern=_read_graph(h_path)))
    except _PARSE_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    click.echo(f"pattern-class={resp.pattern_class}")
    click.echo(f"is-forest={str(resp.is_forest).lower()} "
               f"big-vertices={resp.big_vertices} "
               f"condition-holds={str(resp.condition_holds).lower()}")
    if resp.failing_pair:
        u, v, d = resp.failing_pair
        click.echo(f"failing-pair={u},{v} distance={d}")
    click.echo(f"verdict={resp.verdict} reason={resp.reason}")
    sys.exit({"bounded": 0, "unbounded": EXIT_NEGATIVE, "unknown": EXIT_UNKNOWN}[resp.verdict])


@main.command()
@click.option("--algo", type=click.Choice(["square", "dfs", "tfree"]), required=True)
@click.option("--g", "g_path", required=True, help="graph file")
@click.option("--t", "t_path", default=None, help="tree pattern file (tfree)")
@click.option("--out", default=None, help="coloring output file")
def color(algo: str, g_path: str, t_path: str | None, out: str | None) -> None:
    """Star-color a graph with one of the constructive algorithms."""
    try:
        tree = _read_graph(t_path) if t_path else None
        resp = run_color(ColorRequest(graph=_read_graph(g_path), algorithm=algo, tree=tree))
    except _PARSE_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    if resp.not_t_free is not None:
        click.echo(f"not-t-free reason={resp.not_t_free.reason}")
        if resp.not_t_free.t_witness is not None:
            verts = sorted(resp.not_t_free.t_witness.vertex_map.values())
            click.echo(f"witness-vertices={verts}")
        if out:
            lines = [f"reason: {resp.not_t_free.reason}"]
            if resp.not_t_free.skeleton_vertices:
                lines.append(f"skeleton-vertices: {resp.not_t_free.skeleton_vertices}")
            if resp.not_t_free.t_witness:
                lines.append(f"witness: {resp.not_t_free.t_witness.vertex_map}")
            Path(out).write_text("\n".join(lines) + "\n")
        sys.exit(EXIT_NEGATIVE)
    assert resp.coloring is not None
    click.echo(f"colors={resp.colors_used} bound={resp.bound} valid=star")
    if out:
        c = resp.coloring.to_coloring()
        Path(out).write_text(format_coloring(
            c, (f"algorithm {algo}", f"colors {resp.colors_used} bound {resp.bound}")))


@main.command()
@click.option("--g", "g_path", required=True)
@click.option("--coloring", "c_path", required=True)
@click.option("--mode", type=click.Choice(["proper", "star", "acyclic", "dist2", "avoid"]),
              required=True)
@click.option("--h", "h_path", default=None, help="pattern file (avoid mode)")
def verify(g_path: str, c_path: str, mode: str, h_path: str | None) -> None:
    """Check a coloring file against a graph under the given mode."""
    try:
        gm = _read_graph(g_path)
        cm = ColoringModel.from_coloring(
            parse_coloring(Path(c_path).read_text(), gm.vertex_count))
        pattern = _read_graph(h_path) if h_path else None
        resp = run_verify(VerifyRequest(graph=gm, coloring=cm, mode=mode, pattern=pattern))
    except _PARSE_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    if resp.valid:
        click.echo("valid")
        sys.exit(0)
    click.echo(f"invalid: {resp.witness}")
    sys.exit(EXIT_NEGATIVE)


@main.command()
@click.option("--g", "g_path", required=True)
@click.option("--mode", type=click.Choice(["proper", "star", "acyclic", "dist2", "avoid"]),
              required=True)
@click.option("--h", "h_path", default=None, help="pattern file (avoid mode)")
@click.option("--max-k", "max_k", type=int, required=True)
@click.option("--budget", type=int, default=None)
@click.option("--out", default=None, help="optimal coloring output file")
def exact(g_path: str, mode: str, h_path: str | None, max_k: int,
          budget: int | None, out: str | None) -> None:
    """Exact smallest palette for the given coloring mode."""
    try:
        pattern = _read_graph(h_path) if h_path else None
        resp = run_exact(ExactRequest(graph=_read_graph(g_path), mode=mode,
                                      pattern=pattern, max_k=max_k, budget=budget))
    except _PARSE_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    if resp.status == "exceeds-max-k":
        click.echo("exceeds-max-k")
        sys.exit(EXIT_NEGATIVE)
    if resp.status == "budget-exceeded":
        click.echo("budget-exceeded")
        sys.exit(EXIT_BUDGET)
    click.echo(f"chi={resp.chi}")
    if out and resp.coloring is not None:
        Path(out).write_text(format_coloring(
            resp.coloring.to_coloring(), (f"mode {mode} chi {resp.chi}",)))


@main.command()
@click.option("--kind", type=click.Choice(["gmn", "family", "random-ffree"]), required=True)
@click.option("--m", type=int, default=None)
@click.option("--n", type=int, default=None)
@click.option("--family", default=None)
@click.option("--params", default=None, help="comma-separated integers")
@click.option("--forbid", default=None, help="forbidden subgraph file (random-ffree)")
@click.option("--vertices", type=int, default=None)
@click.option("--edges", type=int, default=None)
@click.option("--seed", type=int, default=0)
@click.option("--attempts", type=int, default=100)
@click.option("--out", required=True, help="graph output file")
def gen(kind: str, m: int | None, n: int | None, family: str | None,
        params: str | None, forbid: str | None, vertices: int | None,
        edges: int | None, seed: int, attempts: int, out: str) -> None:
    """Generate a graph and write it in edge-list format."""
    try:
        req = GenerateRequest(
            kind=kind, m=m, n=n, family=family,
            params=[int(x) for x in params.split(",")] if params else None,
            forbidden=_read_graph(forbid) if forbid else None,
            vertex_count=vertices, target_edges=edges, seed=seed, attempts=attempts)
        resp = run_generate(req)
    except _PARSE_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    g = resp.graph.to_graph()
    Path(out).write_text(format_edge_list(g, (resp.description, f"seed {seed}")))
    click.echo(f"wrote {out}: {g.vertex_count} vertices, {g.edge_count} edges")


@main.command()
@click.option("--config", "config_path", required=True)
def experiment(config_path: str) -> None:
    """Run a batch of experiments from a config file; emits a CSV."""
    from .experiments import run_experiment

    try:
        top, runs = parse_experiment_config(Path(config_path).read_text())
        text = run_experiment(top, runs, Path(config_path).resolve().parent)
    except _PARSE_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    except SearchBudgetExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    click.echo(text, nl=False)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Start the HTTP API."""
    import uvicorn

    uvicorn.run("starcolor.api:app", host=host, port=port)


if __name__ == "__main__":
    main()
