"""
Triangulations of the pentagon.

A FiveTriangulation is a planar map whose outer face is the simple 5-cycle
v1..v5 (clockwise, ``outer_vertices[i]`` is v_{i+1}) and whose other faces
are triangles.
"""

import logging
from typing import List, Optional, Sequence

from src.core.errors import BadOuterFace, NonTriangularInnerFace
from src.planar_map.map import PlanarMap, build_from_rotation_system, find_face_dart

logger = logging.getLogger("fivec")


class FiveTriangulation:
    """A planar map with a designated outer pentagon and triangular inner faces."""

    def __init__(self, m: PlanarMap, outer_vertices: Sequence[int], automorphism: Optional[List[int]] = None):
        self.map = m
        self.outer_vertices: List[int] = list(outer_vertices)
        self.automorphism = list(automorphism) if automorphism is not None else None

        self.outer_index: List[int] = [-1] * m.num_vertices
        for i, v in enumerate(self.outer_vertices):
            self.outer_index[v] = i

        # outer_darts[i] is the dart v_i -> v_{i+1}
        orbit = m.face_darts(m.outer_face)
        k = orbit.index(m.outer_dart)
        self.outer_darts: List[int] = orbit[k:] + orbit[:k]
        outer = m.outer_face
        face_of, twin = m.face_of, m.twin
        self.is_inner_dart: List[bool] = [
            face_of[d] != outer and face_of[twin[d]] != outer for d in range(m.num_darts)
        ]
        self.inner_faces: List[int] = [f for f in range(m.num_faces) if f != outer]

    @property
    def n(self) -> int:
        return self.map.num_vertices

    @property
    def num_inner_faces(self) -> int:
        return len(self.inner_faces)

    def is_outer(self, v: int) -> bool:
        return self.outer_index[v] >= 0

    def inner_vertices(self) -> List[int]:
        return [v for v in range(self.n) if self.outer_index[v] < 0]

    def is_inner_corner(self, c: int) -> bool:
        return self.map.face_of[self.map.twin[c]] != self.map.outer_face

    def boundary_face(self, i: int) -> int:
        """Inner face b_i containing the outer edge v_i v_{i+1}."""
        return self.map.face_of[self.map.twin[self.outer_darts[i]]]

    def face_corners_clockwise(self, f: int) -> List[int]:
        """Vertices of face f in clockwise order."""
        return list(reversed(self.map.face_vertices(f)))

    def __repr__(self) -> str:
        return f"FiveTriangulation(n={self.n}, inner_faces={self.num_inner_faces})"


def check_five_triangulation(
    m: PlanarMap,
    outer: Sequence[int],
    automorphism: Optional[List[int]] = None,
) -> FiveTriangulation:
    """
    Check that m is a triangulation of the pentagon with outer cycle ``outer``.

    Args:
        m: a valid planar map
        outer: v1..v5 in clockwise order
        automorphism: optional vertex permutation sending v_i to v_{i+1}

    Returns:
        FiveTriangulation over m with its outer dart starting at v1

    Raises:
        BadOuterFace: outer is not five distinct vertices forming a face walk
        NonTriangularInnerFace: some other face is not a triangle
    """
    outer = list(outer)
    if len(outer) != 5 or len(set(outer)) != 5:
        raise BadOuterFace(f"outer face must be 5 distinct vertices, got {outer}", witness=outer)
    d = find_face_dart(m, outer)
    if d < 0:
        raise BadOuterFace(f"{outer} is not a face walk of the map", witness=outer)
    m = m.with_outer(d)
    for f in range(m.num_faces):
        if f != m.outer_face and m.face_degree(f) != 3:
            raise NonTriangularInnerFace(
                f"inner face {f} has degree {m.face_degree(f)}",
                witness=m.face_vertices(f),
            )
    t = FiveTriangulation(m, outer, automorphism)
    logger.debug(f"Accepted 5-triangulation with n={t.n}, inner faces={t.num_inner_faces}")
    return t


def triangulation_from_rotation_system(
    rot: Sequence[Sequence[int]],
    outer: Sequence[int],
    automorphism: Optional[List[int]] = None,
) -> FiveTriangulation:
    return check_five_triangulation(build_from_rotation_system(rot, outer), outer, automorphism)
