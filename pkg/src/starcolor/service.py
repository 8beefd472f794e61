"""Request/response models and the operations behind both the HTTP API and
the CLI. The CLI calls these functions in-process; the FastAPI app exposes
the same surface over HTTP."""
from __future__ import annotations

from pydantic import BaseModel, Field

from . import colorers, exact, generators
from .colorings import (
    BicoloredWitness,
    Coloring,
    classify_f,
    classify_h,
    acyclic_violation,
    dist2_violation,
    find_bicolored,
    proper_violation,
    star_violation,
)
from .errors import DomainError, ExceedsMaxK, SearchBudgetExceeded
from .graphs import Graph, SubgraphWitness


class GraphModel(BaseModel):
    vertex_count: int = Field(ge=0)
    edges: list[tuple[int, int]] = Field(default_factory=list)

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphModel":
        return cls(vertex_count=g.vertex_count, edges=list(g.edge_list))

    def to_graph(self) -> Graph:
        return Graph.build(self.vertex_count, self.edges)


class ColoringModel(BaseModel):
    colors: list[int]

    @classmethod
    def from_coloring(cls, c: Coloring) -> "ColoringModel":
        return cls(colors=list(c.colors))

    def to_coloring(self) -> Coloring:
        return Coloring(tuple(self.colors))


class SubgraphWitnessModel(BaseModel):
    vertex_map: dict[int, int]
    edge_list: list[tuple[int, int]]

    @classmethod
    def from_witness(cls, w: SubgraphWitness) -> "SubgraphWitnessModel":
        return cls(vertex_map=dict(w.vertex_map), edge_list=list(w.edge_list))


class BicoloredWitnessModel(BaseModel):
    color_pair: tuple[int, int]
    subgraph: SubgraphWitnessModel

    @classmethod
    def from_witness(cls, w: BicoloredWitness) -> "BicoloredWitnessModel":
        return cls(color_pair=w.color_pair,
                   subgraph=SubgraphWitnessModel.from_witness(w.subgraph))


class ClassifyRequest(BaseModel):
    forbidden: GraphModel
    pattern: GraphModel


class ClassifyResponse(BaseModel):
    pattern_class: str
    is_forest: bool
    big_vertices: list[int]
    condition_holds: bool
    failing_pair: tuple[int, int, int] | None
    verdict: str
    reason: str


def run_classify(req: ClassifyRequest) -> ClassifyResponse:
    hclass = classify_h(req.pattern.to_graph())
    result = classify_f(req.forbidden.to_graph(), hclass)
    prof = result.profile
    assert prof is not None
    return ClassifyResponse(
        pattern_class=hclass.value,
        is_forest=prof.is_forest,
        big_vertices=sorted(prof.big_vertices),
        condition_holds=prof.condition_holds,
        failing_pair=prof.failing_pair,
        verdict=result.verdict.value,
        reason=result.reason,
    )


class ColorRequest(BaseModel):
    graph: GraphModel
    algorithm: str  # square | dfs | tfree
    tree: GraphModel | None = None


class NotTFreeModel(BaseModel):
    reason: str
    skeleton_vertices: list[int] | None = None
    skeleton_smalls: list[int] | None = None
    t_witness: SubgraphWitnessModel | None = None
    incomplete: bool = False


class ColorResponse(BaseModel):
    coloring: ColoringModel | None
    colors_used: int | None
    bound: int | None
    not_t_free: NotTFreeModel | None = None


def run_color(req: ColorRequest) -> ColorResponse:
    g = req.graph.to_graph()
    if req.algorithm == "square":
        c = colorers.color_square_greedy(g)
        return ColorResponse(coloring=ColoringModel.from_coloring(c),
                             colors_used=c.palette_size,
                             bound=g.max_degree ** 2 + 1)
    if req.algorithm == "dfs":
        c = colorers.color_dfs_levels(g)
        return ColorResponse(coloring=ColoringModel.from_coloring(c),
                             colors_used=c.palette_size, bound=c.palette_size)
    if req.algorithm == "tfree":
        if req.tree is None:
            raise DomainError("tfree coloring needs a tree pattern")
        result = colorers.color_star_tfree(g, req.tree.to_graph())
        if isinstance(result, colorers.NotTFreeReport):
            return ColorResponse(
                coloring=None, colors_used=None, bound=None,
                not_t_free=NotTFreeModel(
                    reason=result.reason,
                    skeleton_vertices=(sorted(result.skeleton.vertex_map.values())
                                       if result.skeleton else None),
                    skeleton_smalls=(list(result.skeleton_smalls)
                                     if result.skeleton_smalls else None),
                    t_witness=(SubgraphWitnessModel.from_witness(result.t_witness)
                               if result.t_witness else None),
                    incomplete=result.incomplete,
                ))
        return ColorResponse(coloring=ColoringModel.from_coloring(result.coloring),
                             colors_used=result.coloring.palette_size,
                             bound=result.ledger.c_value)
    raise DomainError(f"unknown algorithm {req.algorithm!r}")


class VerifyRequest(BaseModel):
    graph: GraphModel
    coloring: ColoringModel
    mode: str  # proper | star | acyclic | dist2 | avoid
    pattern: GraphModel | None = None


class VerifyResponse(BaseModel):
    valid: bool
    witness: str | None = None


def run_verify(req: VerifyRequest) -> VerifyResponse:
    g = req.graph.to_graph()
    c = req.coloring.to_coloring()
    edge = proper_violation(g, c)
    if edge is not None:
        return VerifyResponse(valid=False, witness=f"monochromatic edge {edge}")
    mode = req.mode
    if mode == "proper":
        return VerifyResponse(valid=True)
    if mode == "dist2":
        pair = dist2_violation(g, c)
        if pair is not None:
            return VerifyResponse(valid=False,
                                  witness=f"same color at distance <= 2: {pair}")
        return VerifyResponse(valid=True)
    if mode == "star":
        w = star_violation(g, c)
        if w is not None:
            path = [w.subgraph.vertex_map[i] for i in range(4)]
            return VerifyResponse(valid=False,
                                  witness=f"bicolored 4-path {path} colors {w.color_pair}")
        return VerifyResponse(valid=True)
    if mode == "acyclic":
        cyc = acyclic_violation(g, c)
        if cyc is not None:
            return VerifyResponse(valid=False, witness=f"bicolored cycle {cyc}")
        return VerifyResponse(valid=True)
    if mode == "avoid":
        if req.pattern is None:
            raise DomainError("avoid mode needs a pattern")
        w = find_bicolored(g, c, req.pattern.to_graph())
        if w is not None:
            verts = sorted(w.subgraph.vertex_map.values())
            return VerifyResponse(valid=False,
                                  witness=f"bicolored pattern on {verts} colors {w.color_pair}")
        return VerifyResponse(valid=True)
    raise DomainError(f"unknown mode {mode!r}")


class ExactRequest(BaseModel):
    graph: GraphModel
    mode: str
    pattern: GraphModel | None = None
    max_k: int = Field(ge=1)
    budget: int | None = None


class ExactResponse(BaseModel):
    status: str  # ok | exceeds-max-k | budget-exceeded
    chi: int | None = None
    coloring: ColoringModel | None = None


def _build_mode(mode: str, pattern: GraphModel | None) -> exact.ColoringMode:
    if mode == "avoid":
        if pattern is None:
            raise DomainError("avoid mode needs a pattern")
        return exact.ColoringMode.avoid(pattern.to_graph())
    return exact.ColoringMode(mode)


def run_exact(req: ExactRequest) -> ExactResponse:
    g = req.graph.to_graph()
    mode = _build_mode(req.mode, req.pattern)
    try:
        k, c = exact.exact_chromatic(g, mode, req.max_k, req.budget)
    except ExceedsMaxK:
        return ExactResponse(status="exceeds-max-k")
    except SearchBudgetExceeded:
        return ExactResponse(status="budget-exceeded")
    return ExactResponse(status="ok", chi=k, coloring=ColoringModel.from_coloring(c))


class GenerateRequest(BaseModel):
    kind: str  # gmn | family | random-ffree
    m: int | None = None
    n: int | None = None
    family: str | None = None
    params: list[int] | None = None
    forbidden: GraphModel | None = None
    vertex_count: int | None = None
    target_edges: int | None = None
    seed: int | None = None
    attempts: int = 100


class GenerateResponse(BaseModel):
    graph: GraphModel
    description: str


def run_generate(req: GenerateRequest) -> GenerateResponse:
    if req.kind == "gmn":
        if req.m is None or req.n is None:
            raise DomainError("gmn needs m and n")
        g, _ = generators.gen_gmn(req.m, req.n)
        return GenerateResponse(graph=GraphModel.from_graph(g),
                                description=f"gmn m={req.m} n={req.n}")
    if req.kind == "family":
        if req.family is None:
            raise DomainError("family kind needs a family name")
        g = generators.gen_family(req.family, tuple(req.params or ()))
        return GenerateResponse(graph=GraphModel.from_graph(g),
                                description=f"family {req.family} params={req.params}")
    if req.kind == "random-ffree":
        if req.forbidden is None or req.vertex_count is None \
                or req.target_edges is None or req.seed is None:
            raise DomainError("random-ffree needs forbidden, vertex_count, target_edges, seed")
        g = generators.gen_random_ffree(req.forbidden.to_graph(), req.vertex_count,
                                        req.target_edges, req.seed, req.attempts)
        return GenerateResponse(
            graph=GraphModel.from_graph(g),
            description=f"random-ffree n={req.vertex_count} "
                        f"edges={g.edge_count} seed={req.seed}")
    raise DomainError(f"unknown generator kind {req.kind!r}")
