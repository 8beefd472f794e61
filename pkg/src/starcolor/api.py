"""FastAPI application exposing the service operations over HTTP."""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .errors import (
    ConditionViolated,
    DisconnectedGraph,
    DomainError,
    GraphFormatError,
    NotApplicable,
    SearchBudgetExceeded,
    SizeMismatch,
    TooSmall,
)
from .service import (
    ClassifyRequest,
    ClassifyResponse,
    ColorRequest,
    ColorResponse,
    ExactRequest,
    ExactResponse,
    GenerateRequest,
    GenerateResponse,
    VerifyRequest,
    VerifyResponse,
    run_classify,
    run_color,
    run_exact,
    run_generate,
    run_verify,
)

app = FastAPI(title="starcolor", version="0.1.0",
              description="Star, acyclic, and pattern-avoiding coloring service")

_BAD_INPUT = (GraphFormatError, DomainError, DisconnectedGraph, SizeMismatch,
              ConditionViolated, NotApplicable, TooSmall)


@app.exception_handler(Exception)
async def _domain_errors(request: Request, exc: Exception) -> JSONResponse:
    if isinstance(exc, _BAD_INPUT):
        return JSONResponse(status_code=422, content={"detail": str(exc)})
    if isinstance(exc, SearchBudgetExceeded):
        return JSONResponse(status_code=413, content={"detail": str(exc)})
    raise exc


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.post("/classify", response_model=ClassifyResponse)
def classify(req: ClassifyRequest) -> ClassifyResponse:
    return run_classify(req)


@app.post("/color", response_model=ColorResponse)
def color(req: ColorRequest) -> ColorResponse:
    return run_color(req)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    return run_verify(req)


@app.post("/exact", response_model=ExactResponse)
def exact(req: ExactRequest) -> ExactResponse:
    return run_exact(req)


@app.post("/generate", response_model=GenerateResponse)
def generate(req: GenerateRequest) -> GenerateResponse:
    return run_generate(req)
