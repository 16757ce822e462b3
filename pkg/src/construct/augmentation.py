"""
The 4-gon triangulation H, angular maps and the regular orientation of H⋄.

H is G plus a vertex v0 in the outer face joined to v1..v4; its outer face
is the 4-cycle v0, v4, v5, v1 in face-walk order. The angular map X⋄ of a
map X has the vertices of X plus one face-vertex per inner face, each
face-vertex joined to the corners of its face; the edges of X are dropped.
"""

import logging
from typing import Dict, FrozenSet, List, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from src.core.errors import Infeasible
from src.planar_map.map import PlanarMap, build_from_rotation_system
from src.triangulation5.triangulation import FiveTriangulation

logger = logging.getLogger("fivec")


def angular_map(m: PlanarMap, inner_faces: Sequence[int]) -> Tuple[PlanarMap, List[int]]:
    """
    Angular map of m with its outer face kept as a face.

    Args:
        m: a planar map with simple triangular inner faces
        inner_faces: faces of m that receive a face-vertex, in id order

    Returns:
        (diamond map, face_vertex) with face_vertex[f] the vertex of face f,
        -1 for faces without one
    """
    n = m.num_vertices
    face_vertex = [-1] * m.num_faces
    for k, f in enumerate(inner_faces):
        face_vertex[f] = n + k
    rot: List[List[int]] = [[] for _ in range(n + len(inner_faces))]
    for v in range(n):
        rot[v] = [face_vertex[m.corner_face(d)] for d in m.vertex_darts(v) if face_vertex[m.corner_face(d)] >= 0]
    for f in inner_faces:
        rot[face_vertex[f]] = list(reversed(m.face_vertices(f)))
    outer_cycle: List[int] = []
    for d in m.face_darts(m.outer_face):
        outer_cycle.extend([m.origin[d], face_vertex[m.face_of[m.twin[d]]]])
    return build_from_rotation_system(rot, outer_cycle), face_vertex


class QuadAugmentation:
    """H and H⋄ for a 5-triangulation G."""

    def __init__(self, t: FiveTriangulation):
        self.triangulation = t
        g = t.map
        n = g.num_vertices
        outer = t.outer_vertices
        self.v0 = n
        rot = g.rotation_system()
        for i in range(4):
            neighbours = rot[outer[i]]
            neighbours.insert(neighbours.index(outer[i - 1]) + 1, self.v0)
        rot.append([outer[3], outer[2], outer[1], outer[0]])
        self.h_outer: List[int] = [self.v0, outer[3], outer[4], outer[0]]
        self.h: PlanarMap = build_from_rotation_system(rot, self.h_outer)
        h = self.h
        self.h_inner_faces: List[int] = [f for f in range(h.num_faces) if f != h.outer_face]
        self.hdiamond, self.face_vertex = angular_map(h, self.h_inner_faces)
        self.face_key: Dict[FrozenSet[int], int] = {frozenset(h.face_vertices(f)): f for f in self.h_inner_faces}
        logger.debug(
            f"H has {h.num_vertices} vertices and {len(self.h_inner_faces)} inner faces; "
            f"H⋄ has {self.hdiamond.num_edges} edges"
        )

    def is_h_outer(self, v: int) -> bool:
        return v in self.h_outer


def augment(t: FiveTriangulation) -> QuadAugmentation:
    return QuadAugmentation(t)


class RegularOrientation:
    """Orientation of H⋄ as one flag per dart, ``out[d]`` meaning origin -> target."""

    def __init__(self, q: QuadAugmentation, out: List[bool]):
        self.augmentation = q
        self.out = out

    def outdegree(self, v: int) -> int:
        return sum(1 for d in self.augmentation.hdiamond.vertex_darts(v) if self.out[d])


def regular_orientation(q: QuadAugmentation) -> RegularOrientation:
    """
    Orient H⋄ so face-vertices have outdegree 1 and inner original vertices 4.

    Solved as a unit-capacity flow: each face sends one unit to the vertex
    its single out-edge reaches; an inner vertex of degree d absorbs d - 4
    units; the outer vertices of H together absorb their total degree minus
    4. A face->vertex unit means face -> vertex, otherwise vertex -> face.

    Raises:
        Infeasible: no such orientation; H has a short separating cycle
    """
    hd = q.hdiamond
    h = q.h
    n_orig = h.num_vertices
    faces = q.h_inner_faces
    n_faces = len(faces)
    source, sink, hub = 0, 1, 2
    face_node = {q.face_vertex[f]: 3 + k for k, f in enumerate(faces)}

    def vertex_node(v: int) -> int:
        return 3 + n_faces + v

    rows: List[int] = []
    cols: List[int] = []
    caps: List[int] = []

    def arc(a: int, b: int, cap: int) -> None:
        rows.append(a)
        cols.append(b)
        caps.append(cap)

    for fv, node in face_node.items():
        arc(source, node, 1)
        for v in hd.neighbors(fv):
            arc(node, vertex_node(v), 1)
    outer_total = 0
    for v in range(n_orig):
        d = hd.degree(v)
        if q.is_h_outer(v):
            arc(vertex_node(v), hub, d)
            outer_total += d
            continue
        if d < 4:
            raise Infeasible(f"inner vertex {v} of H has degree {d} < 4", witness=[v])
        arc(vertex_node(v), sink, d - 4)
    if outer_total < 4:
        raise Infeasible(f"outer vertices of H have total degree {outer_total}")
    arc(hub, sink, outer_total - 4)

    size = 3 + n_faces + n_orig
    graph = csr_matrix(
        (np.array(caps, dtype=np.int32), (np.array(rows), np.array(cols))),
        shape=(size, size),
    )
    result = maximum_flow(graph, source, sink, method="dinic")
    if result.flow_value != n_faces:
        raise Infeasible(
            f"regular orientation saturates only {result.flow_value} of {n_faces} faces of H",
            witness=result.flow_value,
        )

    target_of: Dict[int, int] = {}
    flow = result.flow.tocoo()
    for a, b, value in zip(flow.row, flow.col, flow.data):
        if value > 0 and 3 <= a < 3 + n_faces and b >= 3 + n_faces:
            target_of[int(a)] = int(b) - 3 - n_faces

    out = [False] * hd.num_darts
    for fv, node in face_node.items():
        for d in hd.vertex_darts(fv):
            if hd.target(d) == target_of[node]:
                out[d] = True
            else:
                out[hd.twin[d]] = True
    orientation = RegularOrientation(q, out)
    outer_out = sum(orientation.outdegree(v) for v in q.h_outer)
    if n_faces + 4 * (n_orig - 4) + outer_out != 3 * n_faces:
        raise Infeasible(f"outdegree sum check fails with outer outdegree {outer_out}")
    logger.debug(f"Regular orientation of H⋄ found ({n_faces} faces)")
    return orientation
