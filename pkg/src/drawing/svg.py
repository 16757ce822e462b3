"""
SVG output for drawings.

The frame is the circumradius-1 pentagon; window coordinates scale it by
``scale`` pixels, shift it by one margin and flip the y axis so V_1 V_5 is
at the bottom of the picture.
"""

import logging
from typing import List, Optional

from src.core.config import get_settings
from src.drawing.barycentric import Drawing
from src.structures.wood import WoodColoring
from src.utils.file_utils import FileUtils

logger = logging.getLogger("fivec")

SVG_HEADER = """<?xml version="1.0" standalone="no"?>
<svg width="%d" height="%d" version="1.1" xmlns="http://www.w3.org/2000/svg">
"""

SVG_FOOTER = """</svg>
"""

# stroke per wood color 1..5
PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e")


class SvgGraph:
    """String builder for line-and-dot pictures."""

    def __init__(self, scale: Optional[float] = None, margin: float = 0.1):
        self.scale = scale if scale is not None else get_settings().FIVEC_SVG_SCALE
        self.margin = margin

    @property
    def size(self) -> int:
        return int(round(self.scale * (2 + 2 * self.margin)))

    def window_coords(self, x: float, y: float):
        offset = 1 + self.margin
        return self.scale * (x + offset), self.scale * (offset - y)

    def header(self) -> str:
        return SVG_HEADER % (self.size, self.size)

    def footer(self) -> str:
        return SVG_FOOTER

    def line(self, x1: float, y1: float, x2: float, y2: float, color: str = "grey", width: float = 1) -> str:
        x1, y1 = self.window_coords(x1, y1)
        x2, y2 = self.window_coords(x2, y2)
        return (
            f'  <line x1="{x1:.4f}" y1="{y1:.4f}" x2="{x2:.4f}" y2="{y2:.4f}"'
            f' style="stroke:{color};stroke-width:{width:g}"/>\n'
        )

    def dot(self, x: float, y: float, color: str = "black", radius: float = 3) -> str:
        x, y = self.window_coords(x, y)
        return (
            f'  <circle cx="{x:.4f}" cy="{y:.4f}" r="{radius:g}"'
            f' style="stroke:black;stroke-width:1;fill:{color}"/>\n'
        )

    def text(self, string: str, x: float, y: float) -> str:
        x, y = self.window_coords(x, y)
        return f'  <text x="{x + 4:.4f}" y="{y - 4:.4f}" style="font-family:Verdana;font-size:10">{string}</text>\n'


def drawing_svg(
    d: Drawing,
    scale: Optional[float] = None,
    wood: Optional[WoodColoring] = None,
    labels: bool = False,
) -> str:
    """
    Render a drawing. Elements are emitted edges by edge id, then colored
    arcs by dart id, then vertices by vertex id.

    Args:
        d: the drawing
        scale: pixels per unit, FIVEC_SVG_SCALE when omitted
        wood: when given, colored arcs are redrawn over the edges in their
            wood color
        labels: write vertex ids next to the dots
    """
    svg = SvgGraph(scale)
    g = d.triangulation.map
    xy = d.coords
    parts: List[str] = [svg.header()]
    for e in range(g.num_edges):
        dart = g.edge_dart(e)
        (x1, y1), (x2, y2) = xy[g.origin[dart]], xy[g.target(dart)]
        parts.append(svg.line(x1, y1, x2, y2))
    if wood is not None:
        for dart, col in enumerate(wood.color):
            if col is None:
                continue
            (x1, y1), (x2, y2) = xy[g.origin[dart]], xy[g.target(dart)]
            # colored half nearest the tail, so bicolored edges show both colors
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            parts.append(svg.line(x1, y1, mx, my, color=PALETTE[col], width=2))
    for v in range(d.n):
        x, y = xy[v]
        parts.append(svg.dot(x, y, color="white" if d.triangulation.is_outer(v) else "black"))
        if labels:
            parts.append(svg.text(str(v), x, y))
    parts.append(svg.footer())
    return "".join(parts)


def write_svg(d: Drawing, path: str, scale: Optional[float] = None, wood: Optional[WoodColoring] = None) -> None:
    FileUtils.write_text_atomic(path, drawing_svg(d, scale, wood))
    logger.info(f"Wrote SVG with {d.n} vertices to {path}")
