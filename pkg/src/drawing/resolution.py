"""
Vertex resolution of a drawing: the smallest distance between two vertices,
normalized by the weight denominator of the mode and compared with the
worst-case constants d5 (faces) and d5' (vertices).
"""

import logging
import math
from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel
from scipy.spatial import cKDTree

from src.core.config import get_settings
from src.drawing.barycentric import Drawing
from src.drawing.exact import Quad5, norm2_quad
from src.drawing.frame import D5, D5_PRIME

logger = logging.getLogger("fivec")


class ResolutionMetrics(BaseModel):
    """Closest-pair metrics of one drawing."""
    min_distance: float
    normalized_min: Optional[float] = None
    bound: Optional[float] = None
    meets_bound: Optional[bool] = None
    closest_pair: Tuple[int, int]


def squared_distance(d: Drawing, u: int, v: int) -> Quad5:
    """Exact |p(u) - p(v)|^2 in Q(sqrt 5)."""
    p, q = d.point(u), d.point(v)
    scale = p.den * q.den
    return norm2_quad(p.minus(q)).scale(Fraction(1, 4 * scale * scale))


def normalizer(d: Drawing) -> Optional[int]:
    """Common weight denominator of the mode, None when weights are arbitrary."""
    if d.mode == "faces":
        return 2 * d.n - 7
    if d.mode == "vertices":
        # the split vertex counts are halves over n-1
        return 2 * (d.n - 1)
    return None


def resolution(d: Drawing, neighbours: int = 4) -> ResolutionMetrics:
    """
    Minimum pairwise vertex distance.

    A KD-tree over the float coordinates proposes each vertex's nearest
    neighbours; the candidates are then compared exactly.

    Args:
        d: the drawing
        neighbours: neighbours queried per vertex, ties in floats are
            resolved by the exact comparison among them
    """
    k = min(neighbours + 1, d.n)
    tree = cKDTree(d.coords)
    _, idx = tree.query(d.coords, k=k)
    best: Optional[Quad5] = None
    pair = (0, 0)
    for u in range(d.n):
        for v in sorted(int(x) for x in idx[u][1:]):
            a, b = min(u, v), max(u, v)
            if a == b:
                continue
            dist2 = squared_distance(d, a, b)
            if best is None or (dist2 - best).sign < 0 or ((dist2 - best).sign == 0 and (a, b) < pair):
                best, pair = dist2, (a, b)

    min_distance = math.sqrt(max(float(best), 0.0))
    metrics = ResolutionMetrics(min_distance=min_distance, closest_pair=pair)
    norm = normalizer(d)
    if norm is not None:
        bound = D5 if d.mode == "faces" else D5_PRIME
        tolerance = get_settings().FIVEC_RESOLUTION_TOLERANCE
        metrics.normalized_min = min_distance * norm
        metrics.bound = bound
        metrics.meets_bound = metrics.normalized_min >= bound - tolerance
        if not metrics.meets_bound:
            logger.warning(f"Normalized resolution {metrics.normalized_min:.6f} below {bound:.6f} for n={d.n}")
    logger.debug(f"Closest pair {pair} at distance {min_distance:.6g}")
    return metrics
