"""
Maps derived from a 5-triangulation: the primal-dual completion G+ and the
corner graph C_G.

G+ subdivides every edge e of G by an edge-vertex x_e and puts a dual
vertex in every inner face, joined to the edge-vertices of its three
edges. Vertex ids of G+ are: primal vertices 0..n-1, edge-vertices
n..n+E-1 (in edge-id order), dual vertices after that (in inner-face
order).
"""

import logging
from enum import IntEnum
from typing import List, NamedTuple, Tuple

from src.planar_map.map import PlanarMap, build_from_rotation_system
from src.triangulation5.triangulation import FiveTriangulation

logger = logging.getLogger("fivec")


class Role(IntEnum):
    PRIMAL = 0
    EDGE = 1
    DUAL = 2


class Completion:
    """The primal-dual completion G+ of a 5-triangulation, with roles."""

    def __init__(self, t: FiveTriangulation):
        self.triangulation = t
        g = t.map
        n, n_edges = g.num_vertices, g.num_edges
        outer = g.outer_face

        self.edge_vertex: List[int] = [n + e for e in range(n_edges)]
        self.dual_vertex: List[int] = [-1] * g.num_faces
        for k, f in enumerate(t.inner_faces):
            self.dual_vertex[f] = n + n_edges + k
        total = n + n_edges + len(t.inner_faces)

        self.role: List[Role] = [Role.PRIMAL] * n + [Role.EDGE] * n_edges + [Role.DUAL] * len(t.inner_faces)
        self.ref: List[int] = list(range(n)) + list(range(n_edges)) + list(t.inner_faces)

        edge_of, face_of, twin = g.edge_of, g.face_of, g.twin
        rot: List[List[int]] = [[] for _ in range(total)]
        for v in range(n):
            rot[v] = [n + edge_of[d] for d in g.vertex_darts(v)]
        for e in range(n_edges):
            d = g.edge_dart(e)
            left, right = face_of[d], face_of[twin[d]]
            around = [g.origin[d]]
            if left != outer:
                around.append(self.dual_vertex[left])
            around.append(g.target(d))
            if right != outer:
                around.append(self.dual_vertex[right])
            rot[n + e] = around
        face_orbits = {}
        for f in t.inner_faces:
            orbit = list(reversed(g.face_darts(f)))
            face_orbits[f] = orbit
            rot[self.dual_vertex[f]] = [n + edge_of[y] for y in orbit]

        x_outer = [n + edge_of[d] for d in t.outer_darts]
        outer_cycle: List[int] = []
        for v, x in zip(t.outer_vertices, x_outer):
            outer_cycle.extend([v, x])

        self.map: PlanarMap = build_from_rotation_system(rot, outer_cycle)
        gp = self.map

        # primal_dart[d]: G+ dart from origin(d) to x_{edge(d)};
        # dual_dart[d]: G+ dart from the face left of d to x_{edge(d)}, -1 on the outer face
        self.primal_dart: List[int] = [0] * g.num_darts
        for v in range(n):
            base = gp.first_dart[v]
            for k, d in enumerate(g.vertex_darts(v)):
                self.primal_dart[d] = base + k
        self.dual_dart: List[int] = [-1] * g.num_darts
        for f, orbit in face_orbits.items():
            base = gp.first_dart[self.dual_vertex[f]]
            for k, y in enumerate(orbit):
                self.dual_dart[y] = base + k

        self.outer_edge_vertices: List[int] = x_outer
        self.boundary_duals: List[int] = [self.dual_vertex[t.boundary_face(i)] for i in range(5)]

        gouter = gp.outer_face
        self.is_inner_dart: List[bool] = [
            gp.face_of[d] != gouter and gp.face_of[gp.twin[d]] != gouter for d in range(gp.num_darts)
        ]
        logger.debug(f"Completion has {total} vertices and {gp.num_edges} edges")

    @property
    def num_vertices(self) -> int:
        return self.map.num_vertices

    def required_outdegree(self, v: int) -> int:
        role = self.role[v]
        if role == Role.EDGE:
            return 1
        if role == Role.DUAL:
            return 2
        return 0 if self.triangulation.is_outer(v) else 5

    def inner_edge_count(self) -> int:
        return sum(self.is_inner_dart) // 2


def completion(t: FiveTriangulation) -> Completion:
    return Completion(t)


def contract_completion(c: Completion) -> List[List[int]]:
    """Forget roles, drop dual vertices and contract edge-vertices: G's rotation system."""
    gp = c.map
    rot = []
    for v in range(c.triangulation.n):
        neighbours = []
        for d in gp.vertex_darts(v):
            x = gp.target(d)
            ends = [w for w in gp.neighbors(x) if c.role[w] == Role.PRIMAL]
            others = [w for w in ends if w != v]
            neighbours.append(others[0] if others else v)
        rot.append(neighbours)
    return rot


class CornerArc(NamedTuple):
    source: int
    target: int
    kind: str
    element: int


class CornerGraph:
    """Directed graph on the inner corners of G.

    Corners are identified with darts. Each inner corner c has an arc to its
    clockwise successor around its vertex, ``sigma[c]``, when that corner is
    inner, and to its clockwise successor around its face,
    ``sigma_inv[twin[c]]``.
    """

    def __init__(self, t: FiveTriangulation):
        self.triangulation = t
        g = t.map
        sigma, sigma_inv, twin = g.sigma, g.sigma_inv, g.twin
        self.is_inner_corner: List[bool] = [t.is_inner_corner(c) for c in range(g.num_darts)]
        self.corners: List[int] = [c for c in range(g.num_darts) if self.is_inner_corner[c]]
        self.arcs: List[CornerArc] = []
        self.out_arcs: List[List[CornerArc]] = [[] for _ in range(g.num_darts)]
        for c in self.corners:
            nxt = sigma[c]
            if self.is_inner_corner[nxt]:
                arc = CornerArc(c, nxt, "vertex", g.origin[c])
                self.arcs.append(arc)
                self.out_arcs[c].append(arc)
            arc = CornerArc(c, sigma_inv[twin[c]], "face", g.corner_face(c))
            self.arcs.append(arc)
            self.out_arcs[c].append(arc)

    @property
    def num_corners(self) -> int:
        return len(self.corners)

    def num_inner_faces(self) -> int:
        # C_G is a connected plane graph; Euler gives all faces, one of them outer
        return 2 - self.num_corners + len(self.arcs) - 1

    def element_cycles(self) -> List[Tuple[str, int, List[int]]]:
        """The directed cycles bounding inner faces of C_G, one per inner vertex, inner edge and inner face of G."""
        t = self.triangulation
        g = t.map
        cycles = []
        for v in t.inner_vertices():
            cycles.append(("vertex", v, g.vertex_darts(v)))
        for e in range(g.num_edges):
            d = g.edge_dart(e)
            if t.is_inner_dart[d]:
                cycles.append(("edge", e, [g.sigma_inv[d], d, g.sigma_inv[g.twin[d]], g.twin[d]]))
        for f in t.inner_faces:
            start = g.twin[g.face_darts(f)[0]]
            walk = [start]
            c = g.sigma_inv[g.twin[start]]
            while c != start:
                walk.append(c)
                c = g.sigma_inv[g.twin[c]]
            cycles.append(("face", f, walk))
        return cycles


def corner_graph(t: FiveTriangulation) -> CornerGraph:
    return CornerGraph(t)
