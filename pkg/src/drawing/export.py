"""
JSON export of drawings: exact weights as "num/den" strings plus float coordinates.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from src.drawing.barycentric import Drawing
from src.drawing.resolution import ResolutionMetrics
from src.utils.file_utils import FileUtils


class VertexPosition(BaseModel):
    vertex: int
    weights: List[str] = Field(..., min_length=5, max_length=5)
    x: float
    y: float


class DrawingDocument(BaseModel):
    kind: str = "drawing"
    mode: str
    n: int
    vertices: List[VertexPosition]
    metrics: Optional[ResolutionMetrics] = None


def drawing_document(d: Drawing, metrics: Optional[ResolutionMetrics] = None) -> DrawingDocument:
    rows = []
    for v in range(d.n):
        x, y = d.coords[v]
        rows.append(VertexPosition(
            vertex=v,
            weights=[f"{w.numerator}/{w.denominator}" for w in d.point(v).weights()],
            x=round(float(x), 12),
            y=round(float(y), 12),
        ))
    return DrawingDocument(mode=d.mode, n=d.n, vertices=rows, metrics=metrics)


def dumps_drawing(d: Drawing, metrics: Optional[ResolutionMetrics] = None) -> str:
    return FileUtils.dumps_json(drawing_document(d, metrics).model_dump(exclude_none=True))
