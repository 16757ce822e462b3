"""
The 5c-barycentric placement: every vertex at the barycenter of the
pentagon anchors weighted by its region sizes.
"""

import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.drawing.exact import cross_sign
from src.drawing.frame import PentagonFrame
from src.regions.sizes import region_sizes_linear, weights
from src.regions.trees import wood_trees
from src.structures.wood import WoodColoring
from src.triangulation5.triangulation import FiveTriangulation

logger = logging.getLogger("fivec")


class BaryPoint:
    """Five rational weights stored as integer numerators over a common positive denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence[int], den: int):
        if den <= 0:
            raise ValueError("denominator must be positive")
        self.num: Tuple[int, ...] = tuple(int(x) for x in num)
        self.den = int(den)

    @classmethod
    def from_weights(cls, alpha: Sequence[Fraction]) -> "BaryPoint":
        den = 1
        for x in alpha:
            den = den * x.denominator // math.gcd(den, x.denominator)
        return cls([x.numerator * (den // x.denominator) for x in alpha], den)

    @classmethod
    def anchor(cls, i: int) -> "BaryPoint":
        return cls([1 if k == i else 0 for k in range(5)], 1)

    def weights(self) -> List[Fraction]:
        return [Fraction(x, self.den) for x in self.num]

    def float_weights(self) -> np.ndarray:
        return np.array(self.num, dtype=float) / self.den

    def minus(self, other: "BaryPoint") -> List[int]:
        """self - other scaled by the positive integer self.den * other.den."""
        return [a * other.den - b * self.den for a, b in zip(self.num, other.num)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BaryPoint):
            return NotImplemented
        return self.weights() == other.weights()

    def __hash__(self) -> int:
        return hash(tuple(self.weights()))

    def __repr__(self) -> str:
        return f"BaryPoint({[str(x) for x in self.weights()]})"


def orient3(p: BaryPoint, q: BaryPoint, r: BaryPoint) -> int:
    """Exact sign of cross(q - p, r - p); -1 for a clockwise triple."""
    return cross_sign(q.minus(p), r.minus(p))


def orient3_float(p: BaryPoint, q: BaryPoint, r: BaryPoint, frame: Optional[PentagonFrame] = None) -> float:
    """The same determinant in floating point, for cross-checks only."""
    frame = frame or PentagonFrame()
    a, b, c = (frame.coordinates(x.float_weights()) for x in (p, q, r))
    u, v = b - a, c - a
    return float(u[0] * v[1] - u[1] * v[0])


class Drawing:
    """Exact barycentric positions of all vertices, with float coordinates for output."""

    def __init__(self, t: FiveTriangulation, points: List[BaryPoint], mode: str, frame: Optional[PentagonFrame] = None):
        self.triangulation = t
        self.points = points
        self.mode = mode
        self.frame = frame or PentagonFrame()
        self.coords: np.ndarray = self.frame.coordinates(np.array([p.float_weights() for p in points]))

    @property
    def n(self) -> int:
        return self.triangulation.n

    def point(self, v: int) -> BaryPoint:
        return self.points[v]

    def moved(self, v: int, point: BaryPoint) -> "Drawing":
        points = list(self.points)
        points[v] = point
        return Drawing(self.triangulation, points, self.mode, self.frame)


def place(
    t: FiveTriangulation,
    alpha: List[List[Fraction]],
    mode: str = "faces",
    frame: Optional[PentagonFrame] = None,
) -> Drawing:
    """
    Place every vertex at sum_i alpha_i(v) V_i.

    Args:
        t: the triangulation
        alpha: per-vertex weights from ``regions.sizes.weights``
        mode: tag recorded on the drawing
        frame: pentagon frame, the default circumradius-1 frame when omitted
    """
    points = []
    for v in range(t.n):
        if any(x < 0 for x in alpha[v]) or sum(alpha[v]) != 1:
            raise ValueError(f"invalid weights for vertex {v}: {alpha[v]}")
        points.append(BaryPoint.from_weights(alpha[v]))
    drawing = Drawing(t, points, mode, frame)
    logger.debug(f"Placed {t.n} vertices in {mode} mode")
    return drawing


def draw_wood(
    w: WoodColoring,
    mode: str = "faces",
    face_weights: Optional[Sequence[float]] = None,
    frame: Optional[PentagonFrame] = None,
) -> Drawing:
    """Trees, linear region sizes, weights and placement in one call."""
    trees = wood_trees(w)
    table = region_sizes_linear(trees)
    return place(w.triangulation, weights(table, mode, face_weights), mode, frame)
