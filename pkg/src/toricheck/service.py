"""HTTP front end: a FastAPI app exposing the library over JSON.

Request and response bodies mirror the file formats used by the CLI, so a
graph accepted by one front end is accepted by the other.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from . import __version__
from .compgroup import component_group
from .criteria import CRITERIA, check_all
from .errors import InternalInvariantError, InvalidParameterError, \
    NotDisciplinedError, ToricheckError
from .graph import LabelledGraph, contract, validate
from .graphio import graph_json_obj, parse_graph_obj
from .oracle import GeneratorConfig, random_labelled_graph
from .purity import purity_report
from .resolution import resolve


class VertexModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    id: str
    genus: int = Field(default=0, ge=0)


class EdgeModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    id: str
    ends: Tuple[str, str]
    label: List[int]


class GraphModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    num_params: int = Field(ge=1)
    vertices: List[VertexModel]
    edges: List[EdgeModel]


class VerdictModel(BaseModel):
    criterion: str
    holds: bool
    witness: Optional[dict] = None


class CheckRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    graph: GraphModel


class CheckResponse(BaseModel):
    verdicts: Dict[str, VerdictModel]


class ContractRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    graph: GraphModel
    params: List[int]


class ContractResponse(BaseModel):
    graph: GraphModel
    vertex_map: Dict[str, str]


class PurityRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    graph: GraphModel


class PurityResponse(BaseModel):
    domain_rank: int
    codomain_ranks: List[int]
    matrix: List[List[int]]
    injective: bool
    cokernel_torsion: List[int]
    cokernel_free_rank: int
    is_isomorphism: bool


class ResolveRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    graph: GraphModel


class ResolveResponse(BaseModel):
    disciplined: bool
    graph: Optional[GraphModel] = None
    trace: Optional[dict] = None
    offending_edge: Optional[str] = None


class PhiRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    graph: GraphModel
    param: int


class PhiResponse(BaseModel):
    param: int
    invariant_factors: List[int]
    order: int


class RandomRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    num_vertices: int
    num_edges: int
    num_params: int
    max_exponent: int = 3
    seed: int
    class_constraint: str = "any"


class RandomResponse(BaseModel):
    graph: GraphModel


def _to_graph(model: GraphModel) -> LabelledGraph:
    graph = parse_graph_obj(model.model_dump(mode="json"))
    violations = validate(graph)
    if violations:
        raise HTTPException(status_code=400,
                            detail={"violations": violations})
    return graph


def _to_model(graph: LabelledGraph) -> GraphModel:
    return GraphModel.model_validate(graph_json_obj(graph))


def create_app() -> FastAPI:
    app = FastAPI(title="toricheck", version=__version__)

    @app.exception_handler(InternalInvariantError)
    async def _internal(request, exc):  # pragma: no cover - bug channel
        raise HTTPException(status_code=500, detail=str(exc))

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest):
        graph = _to_graph(req.graph)
        verdicts = check_all(graph)
        return {"verdicts": {name: verdicts[name].to_json_obj()
                             for name in CRITERIA}}

    @app.post("/contract", response_model=ContractResponse)
    def contract_route(req: ContractRequest):
        graph = _to_graph(req.graph)
        try:
            result = contract(graph, req.params)
        except InvalidParameterError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {"graph": _to_model(result.graph),
                "vertex_map": result.vertex_map}

    @app.post("/purity", response_model=PurityResponse)
    def purity(req: PurityRequest):
        graph = _to_graph(req.graph)
        return purity_report(graph).to_json_obj()

    @app.post("/resolve", response_model=ResolveResponse)
    def resolve_route(req: ResolveRequest):
        graph = _to_graph(req.graph)
        try:
            out = resolve(graph)
        except NotDisciplinedError as exc:
            return {"disciplined": False, "offending_edge": exc.edge_id}
        return {"disciplined": True, "graph": _to_model(out.graph),
                "trace": out.trace_json_obj()}

    @app.post("/phi", response_model=PhiResponse)
    def phi(req: PhiRequest):
        graph = _to_graph(req.graph)
        try:
            group = component_group(graph, req.param)
        except InvalidParameterError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return group.to_json_obj()

    @app.post("/random", response_model=RandomResponse)
    def random_route(req: RandomRequest):
        config = GeneratorConfig(
            num_vertices=req.num_vertices,
            num_edges=req.num_edges,
            num_params=req.num_params,
            max_exponent=req.max_exponent,
            seed=req.seed,
            class_constraint=req.class_constraint,
        )
        try:
            graph = random_labelled_graph(config)
        except ToricheckError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {"graph": _to_model(graph)}

    return app


app = create_app()
