"""
JSON documents for 5c-structures.

- orientation: directed inner edges of G+, endpoints given by role and id
  (primal -> vertex of G, edge -> edge id of G, dual -> face id of G);
- labeling: one entry per inner corner, labels 1..5;
- wood: one entry per inner arc, color 1..5 or null.
"""

import logging
from typing import List, Literal, Optional, Union
from pydantic import BaseModel, Field

from src.core.errors import ParseError
from src.structures.labeling import CornerLabeling
from src.structures.orientation import FiveCOrientation
from src.structures.wood import WoodColoring
from src.triangulation5.derived import Completion, Role
from src.triangulation5.triangulation import FiveTriangulation
from src.utils.file_utils import FileUtils
from src.utils.validation import ValidationUtils

logger = logging.getLogger("fivec")

RoleName = Literal["primal", "edge", "dual"]
_ROLE_BY_NAME = {"primal": Role.PRIMAL, "edge": Role.EDGE, "dual": Role.DUAL}
_NAME_BY_ROLE = {role: name for name, role in _ROLE_BY_NAME.items()}


class Endpoint(BaseModel):
    role: RoleName
    id: int = Field(..., ge=0)


class OrientedEdge(BaseModel):
    tail: Endpoint
    head: Endpoint


class OrientationDocument(BaseModel):
    kind: Literal["orientation"] = "orientation"
    arcs: List[OrientedEdge]


class CornerEntry(BaseModel):
    vertex: int = Field(..., ge=0)
    index: int = Field(..., ge=0, description="position of the corner's dart in the clockwise rotation")
    label: int = Field(..., ge=1, le=5)


class LabelingDocument(BaseModel):
    kind: Literal["labeling"] = "labeling"
    corners: List[CornerEntry]


class ArcEntry(BaseModel):
    tail: int = Field(..., ge=0)
    head: int = Field(..., ge=0)
    color: Optional[int] = Field(None, ge=1, le=5)


class WoodDocument(BaseModel):
    kind: Literal["wood"] = "wood"
    arcs: List[ArcEntry]


StructureDocument = Union[OrientationDocument, LabelingDocument, WoodDocument]


def _endpoint(c: Completion, v: int) -> Endpoint:
    return Endpoint(role=_NAME_BY_ROLE[c.role[v]], id=c.ref[v])


def orientation_document(o: FiveCOrientation) -> OrientationDocument:
    c = o.completion
    gp = c.map
    arcs = [
        OrientedEdge(tail=_endpoint(c, gp.origin[d]), head=_endpoint(c, gp.target(d)))
        for d in range(gp.num_darts)
        if o.out[d]
    ]
    return OrientationDocument(arcs=arcs)


def labeling_document(l: CornerLabeling) -> LabelingDocument:
    g = l.triangulation.map
    corners = []
    for v in range(g.num_vertices):
        for k, d in enumerate(g.vertex_darts(v)):
            if l.label[d] is not None:
                corners.append(CornerEntry(vertex=v, index=k, label=l.label[d] + 1))
    return LabelingDocument(corners=corners)


def wood_document(w: WoodColoring) -> WoodDocument:
    t = w.triangulation
    g = t.map
    arcs = [
        ArcEntry(tail=g.origin[d], head=g.target(d), color=None if w.color[d] is None else w.color[d] + 1)
        for d in range(g.num_darts)
        if t.is_inner_dart[d]
    ]
    return WoodDocument(arcs=arcs)


def orientation_from_document(doc: OrientationDocument, c: Completion) -> FiveCOrientation:
    """
    Raises:
        ParseError: an endpoint or edge does not exist in G+
    """
    gp = c.map
    lookup = {(c.role[v], c.ref[v]): v for v in range(gp.num_vertices)}
    out = [False] * gp.num_darts
    for arc in doc.arcs:
        ends = []
        for end in (arc.tail, arc.head):
            key = (_ROLE_BY_NAME[end.role], end.id)
            if key not in lookup:
                raise ParseError(f"no {end.role} vertex with id {end.id}", witness=end.model_dump())
            ends.append(lookup[key])
        d = gp.find_dart(ends[0], ends[1])
        if d < 0:
            raise ParseError(f"no edge between {arc.tail.model_dump()} and {arc.head.model_dump()}")
        out[d] = True
    return FiveCOrientation(c, out)


def labeling_from_document(doc: LabelingDocument, t: FiveTriangulation) -> CornerLabeling:
    g = t.map
    label: List[Optional[int]] = [None] * g.num_darts
    for entry in doc.corners:
        if entry.vertex >= g.num_vertices or entry.index >= g.degree(entry.vertex):
            raise ParseError(f"no corner {entry.index} at vertex {entry.vertex}", witness=entry.model_dump())
        label[g.dart_at(entry.vertex, entry.index)] = entry.label - 1
    return CornerLabeling(t, label)


def wood_from_document(doc: WoodDocument, t: FiveTriangulation) -> WoodColoring:
    g = t.map
    color: List[Optional[int]] = [None] * g.num_darts
    for entry in doc.arcs:
        d = g.find_dart(entry.tail, entry.head) if entry.tail < g.num_vertices else -1
        if d < 0:
            raise ParseError(f"no arc {entry.tail}->{entry.head}", witness=entry.model_dump())
        color[d] = None if entry.color is None else entry.color - 1
    return WoodColoring(t, color)


def dumps_structure(doc: StructureDocument) -> str:
    return FileUtils.dumps_json(doc.model_dump())


def parse_structure(data, source: str = "input") -> StructureDocument:
    """Pick the document model by its ``kind`` field."""
    kind = data.get("kind") if isinstance(data, dict) else None
    models = {"orientation": OrientationDocument, "labeling": LabelingDocument, "wood": WoodDocument}
    if kind not in models:
        raise ParseError(f"{source}: unknown structure kind {kind!r}")
    return ValidationUtils.parse_model(data, models[kind], source)
