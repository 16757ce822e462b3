"""
Ingestion of 5c-triangulations from 5-connected triangulations of the sphere.
"""

import logging

from src.core.errors import ApexDegreeNot5, ResultNot5c
from src.planar_map.map import PlanarMap, build_from_rotation_system
from src.triangulation5.five_c import is_5c
from src.triangulation5.triangulation import FiveTriangulation, check_five_triangulation

logger = logging.getLogger("fivec")


def from_five_connected(m: PlanarMap, apex: int) -> FiveTriangulation:
    """
    Delete a degree-5 vertex from a sphere triangulation.

    The link of the apex becomes the outer pentagon. Vertex ids above the
    apex shift down by one.

    Raises:
        ApexDegreeNot5: the apex does not have degree 5
        ResultNot5c: the resulting triangulation has a short separating cycle
    """
    degree = m.degree(apex)
    if degree != 5:
        raise ApexDegreeNot5(f"vertex {apex} has degree {degree}", witness=[apex])

    def renumber(v: int) -> int:
        return v if v < apex else v - 1

    link = m.neighbors(apex)
    rot = [
        [renumber(w) for w in m.neighbors(v) if w != apex]
        for v in range(m.num_vertices)
        if v != apex
    ]
    # clockwise around the apex is counterclockwise around the new outer face
    outer = [renumber(w) for w in reversed(link)]
    t = check_five_triangulation(build_from_rotation_system(rot, outer), outer)
    verdict = is_5c(t)
    if not verdict.ok:
        raise ResultNot5c(
            f"removing vertex {apex} leaves a {verdict.reason} {verdict.cycle}",
            witness=verdict.model_dump(),
        )
    logger.info(f"Removed apex {apex}: 5c-triangulation with n={t.n}")
    return t
