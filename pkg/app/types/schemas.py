"""
JSON surfaces, as pydantic models.

Rationals travel as "p/q" strings (plain ints are accepted on input).
parse_model turns every validation failure into a DomainError.
"""

from typing import Literal

from pydantic import BaseModel, Field, ValidationError, model_validator

from app.core import linalg
from app.core.quiver import double_quiver
from app.types.crystal import OutputFormat
from app.types.errors import DomainError
from app.types.points import FramedPoint, RepPoint
from app.types.segments import Multisegment
from app.types.tableaux import Tableau

Entry = str | int
MatrixRows = list[list[Entry]]


def parse_model(model: type[BaseModel], text: str) -> BaseModel:
    try:
        return model.model_validate_json(text)
    except ValidationError as err:
        raise DomainError(f"malformed {model.__name__} JSON: {err.errors()[0]['msg']}") from err


class RepPointModel(BaseModel):
    dims: list[int]
    maps: dict[str, MatrixRows]
    orientation: Literal["left", "right"] = "left"

    def to_point(self) -> RepPoint:
        if not self.dims:
            raise DomainError("a point needs at least one vertex")
        double = double_quiver(len(self.dims), self.orientation)
        maps = {}
        for arrow_id, rows in self.maps.items():
            a = double.quiver.arrow(arrow_id)
            maps[arrow_id] = linalg.as_matrix(rows, rows=self.dims[a.dst - 1], cols=self.dims[a.src - 1])
        return RepPoint(double=double, dims=tuple(self.dims), maps=maps)

    @classmethod
    def from_point(cls, p: RepPoint) -> "RepPointModel":
        return cls(
            dims=list(p.dims),
            maps={k: linalg.to_rows(p.maps[k]) for k in p.arrow_ids()},
            orientation=p.double.orientation,
        )


class FramedPointModel(RepPointModel):
    wdims: list[int]
    t: dict[str, MatrixRows] = Field(default_factory=dict)

    def to_framed(self) -> FramedPoint:
        p = self.to_point()
        if len(self.wdims) != len(self.dims):
            raise DomainError(f"wdims {self.wdims} and dims {self.dims} have different lengths")
        framing = {}
        for i in range(1, len(self.dims) + 1):
            rows = self.t.get(str(i), [])
            framing[i] = linalg.as_matrix(rows, rows=self.wdims[i - 1], cols=self.dims[i - 1])
        return FramedPoint(rep=p, wdims=tuple(self.wdims), framing=framing)


class MultisegmentModel(BaseModel):
    segments: list[tuple[int, int]]
    n: int | None = None

    def to_multisegment(self, n: int | None = None) -> Multisegment:
        rank = self.n or n
        if rank is None:
            raise DomainError("multisegment JSON needs a rank n")
        return Multisegment.of(rank, self.segments)

    @classmethod
    def from_multisegment(cls, m: Multisegment, with_rank: bool = True) -> "MultisegmentModel":
        return cls(segments=[(s.i, s.j) for s in m.segments], n=m.n if with_rank else None)


class TableauModel(BaseModel):
    rows: list[list[int]]

    def to_tableau(self, n: int) -> Tableau:
        return Tableau(n, tuple(tuple(r) for r in self.rows))


class NodeModel(BaseModel):
    id: str
    label: str
    wt: list[int]
    eps: list[int]
    phi: list[int]
    segments: list[tuple[int, int]] | None = None
    rows: list[list[int]] | None = None


class EdgeModel(BaseModel):
    src: str
    color: int
    dst: str


class GraphModel(BaseModel):
    type: str
    model: str
    root: str
    engine: str | None = None
    wdims: list[int] | None = None
    shape: list[int] | None = None
    depth: int | None = None
    nodes: list[NodeModel]
    edges: list[EdgeModel]


def graph_model(g) -> GraphModel:
    nodes = []
    for n in g.nodes():
        payload = n.payload
        nodes.append(NodeModel(
            id=n.key,
            label=str(payload),
            wt=list(n.wt.coords),
            eps=list(n.eps),
            phi=list(n.phi),
            segments=[(s.i, s.j) for s in payload.segments] if isinstance(payload, Multisegment) else None,
            rows=payload.to_rows() if isinstance(payload, Tableau) else None,
        ))
    edges = [EdgeModel(src=s, color=c, dst=t) for s, c, t in g.edges()]
    return GraphModel(type=g.d.label, root=g.root, nodes=nodes, edges=edges, **g.header)


class MatchPair(BaseModel):
    segments: list[tuple[int, int]]
    tableau: str
    rows: list[list[int]]
    agrees: bool


class MatchingReportModel(BaseModel):
    isomorphic: bool
    reason: str = ""
    nodes: int
    pairs: list[MatchPair]


class JobSpec(BaseModel):
    """Validated CLI job, built before any computation starts."""
    command: str
    n: int | None = Field(default=None, ge=1)
    wdims: list[int] | None = None
    depth: int | None = Field(default=None, ge=0)
    format: OutputFormat = OutputFormat.JSON
    seed: int = Field(default=0, ge=0)
    paranoid: bool = False
    jobs: int = Field(default=1, ge=1)
    node_budget: int = Field(default=10_000, ge=1)

    @model_validator(mode="after")
    def _check_weight(self) -> "JobSpec":
        if self.wdims is not None:
            if any(x < 0 for x in self.wdims):
                raise ValueError(f"weight {self.wdims} is not dominant")
            if self.n is not None and len(self.wdims) != self.n:
                raise ValueError(f"weight {self.wdims} has wrong length for A{self.n}")
        return self

    @classmethod
    def build(cls, **fields) -> "JobSpec":
        try:
            return cls(**fields)
        except ValidationError as err:
            raise DomainError(f"invalid job: {err.errors()[0]['msg']}") from err
