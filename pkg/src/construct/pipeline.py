"""
Existence pipeline: from a 5c-triangulation to a 5c-orientation.

Stages: regular orientation A of H⋄, its restriction B to G⋄ with the
boundary face-vertices lifted to outdegree 2, a BFS tree T of B from v*,
the pairing of non-tree edges with inner faces of G⋄, and the orientation
of G+ around each edge-vertex.
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Set

from src.core.errors import (
    AssemblyError,
    ConstructionError,
    NonUniqueStar,
    Not5c,
    NotAccessible,
)
from src.core.report import Report
from src.construct.augmentation import (
    QuadAugmentation,
    RegularOrientation,
    angular_map,
    augment,
    regular_orientation,
)
from src.structures.orientation import FiveCOrientation, validate_orientation
from src.triangulation5.derived import Completion, completion
from src.triangulation5.five_c import is_5c
from src.triangulation5.triangulation import FiveTriangulation

logger = logging.getLogger("fivec")


class OrientationB:
    """Orientation of G⋄ with the distinguished edge e* and its origin v*."""

    def __init__(self, t: FiveTriangulation, diamond, face_vertex: List[int], out: List[bool], e_star: int):
        self.triangulation = t
        self.diamond = diamond
        self.face_vertex = face_vertex
        self.out = out
        self.e_star = e_star
        self.v_star = diamond.origin[e_star]

    def outdegree(self, v: int) -> int:
        return sum(1 for d in self.diamond.vertex_darts(v) if self.out[d])

    def face_of_vertex(self, v: int) -> int:
        """G face of a face-vertex of G⋄."""
        return self.triangulation.inner_faces[v - self.triangulation.n]


def orientation_b(q: QuadAugmentation, a: RegularOrientation) -> OrientationB:
    """
    Restrict A to G⋄ and lift each b_i to outdegree 2.

    Of the edges {b_i, v_i} and {b_i, v_i+1}, the one pointing into b_i is
    reversed; when both do, {b_i, v_i} is.

    Raises:
        NonUniqueStar: the outdegrees or the edge e* come out wrong
    """
    t = q.triangulation
    g = t.map
    hd = q.hdiamond
    gd, face_vertex = angular_map(g, t.inner_faces)
    out = [False] * gd.num_darts
    for f in t.inner_faces:
        h_face = q.face_key[frozenset(g.face_vertices(f))]
        hfv = q.face_vertex[h_face]
        for d in gd.vertex_darts(face_vertex[f]):
            hdart = hd.find_dart(hfv, gd.target(d))
            out[d] = a.out[hdart]
            out[gd.twin[d]] = a.out[hd.twin[hdart]]

    boundary = []
    for i in range(5):
        b = face_vertex[t.boundary_face(i)]
        boundary.append(b)
        ends = [t.outer_vertices[i], t.outer_vertices[(i + 1) % 5]]
        for v in ends:
            d = gd.find_dart(b, v)
            if out[gd.twin[d]]:
                out[d], out[gd.twin[d]] = True, False
                break

    check = OrientationB(t, gd, face_vertex, out, 0)
    for f in t.inner_faces:
        fv = face_vertex[f]
        expected = 2 if fv in boundary else 1
        if check.outdegree(fv) != expected:
            raise NonUniqueStar(f"face-vertex {fv} has outdegree {check.outdegree(fv)}, expected {expected}", witness=fv)
    for v in t.inner_vertices():
        if check.outdegree(v) != 4:
            raise NonUniqueStar(f"inner vertex {v} has outdegree {check.outdegree(v)} in B", witness=v)
    stars = [d for v in t.outer_vertices for d in gd.vertex_darts(v) if out[d]]
    if len(stars) != 1:
        raise NonUniqueStar(f"{len(stars)} edges leave the outer vertices in B", witness=stars)
    result = OrientationB(t, gd, face_vertex, out, stars[0])
    logger.debug(f"Orientation B: e* = {gd.origin[stars[0]]}->{gd.target(stars[0])}")
    return result


class TreePairing:
    """Spanning tree T of G⋄ rooted at v* and the pairing of non-tree edges with faces."""

    def __init__(self, b: OrientationB, parent_dart: List[int], tree_edges: Set[int], pair_face: Dict[int, int]):
        self.orientation = b
        self.parent_dart = parent_dart
        self.tree_edges = tree_edges
        self.pair_face = pair_face
        self.face_edge: Dict[int, int] = {f: e for e, f in pair_face.items()}
        gd = b.diamond
        self.t_s: Dict[int, int] = {}
        for e, f in pair_face.items():
            d = gd.edge_dart(e)
            head = gd.target(d) if b.out[d] else gd.origin[d]
            self.t_s[f] = head

    @property
    def root(self) -> int:
        return self.orientation.v_star

    def depth(self, v: int) -> int:
        gd = self.orientation.diamond
        k = 0
        while self.parent_dart[v] >= 0:
            v = gd.origin[self.parent_dart[v]]
            k += 1
        return k

    def tree_path(self, u: int, w: int) -> List[int]:
        """Vertices of the tree path from u to w."""
        gd = self.orientation.diamond
        left, right = [u], [w]
        du, dw = self.depth(u), self.depth(w)
        while du > dw:
            left.append(gd.origin[self.parent_dart[left[-1]]])
            du -= 1
        while dw > du:
            right.append(gd.origin[self.parent_dart[right[-1]]])
            dw -= 1
        while left[-1] != right[-1]:
            left.append(gd.origin[self.parent_dart[left[-1]]])
            right.append(gd.origin[self.parent_dart[right[-1]]])
        return left + list(reversed(right[:-1]))


def spanning_tree(b: OrientationB) -> TreePairing:
    """
    BFS tree of B from v* and the face pairing.

    The dual edges of the non-tree edges form a spanning tree of the dual of
    G⋄; each non-tree edge is paired with the face it leads to in a BFS of
    that dual tree from the outer face, which is the face enclosed by its
    fundamental cycle.

    Raises:
        NotAccessible: some vertex of G⋄ is not reachable from v*
    """
    gd = b.diamond
    parent_dart = [-1] * gd.num_vertices
    seen = [False] * gd.num_vertices
    seen[b.v_star] = True
    tree_edges: Set[int] = set()
    queue = deque([b.v_star])
    while queue:
        v = queue.popleft()
        for d in gd.vertex_darts(v):
            w = gd.target(d)
            if b.out[d] and not seen[w]:
                seen[w] = True
                parent_dart[w] = d
                tree_edges.add(gd.edge_of[d])
                queue.append(w)
    unreached = [v for v in range(gd.num_vertices) if not seen[v]]
    if unreached:
        raise NotAccessible(f"{len(unreached)} vertices of G⋄ unreachable from v* = {b.v_star}", witness=unreached[:10])

    pair_face: Dict[int, int] = {}
    reached = [False] * gd.num_faces
    reached[gd.outer_face] = True
    queue = deque([gd.outer_face])
    while queue:
        f = queue.popleft()
        for d in gd.face_darts(f):
            e = gd.edge_of[d]
            if e in tree_edges:
                continue
            other = gd.face_of[gd.twin[d]]
            if not reached[other]:
                reached[other] = True
                pair_face[e] = other
                queue.append(other)
    inner_faces = gd.num_faces - 1
    if len(pair_face) != inner_faces or len(tree_edges) + len(pair_face) != gd.num_edges:
        raise NotAccessible(
            f"pairing covers {len(pair_face)} of {inner_faces} faces with {len(tree_edges)} tree edges"
        )
    logger.debug(f"Spanning tree of G⋄ from v* = {b.v_star}: {len(tree_edges)} tree edges")
    return TreePairing(b, parent_dart, tree_edges, pair_face)


def pairing_oracle(tp: TreePairing) -> Report:
    """Flood-fill every fundamental cycle and check its paired face is inside and incident."""
    gd = tp.orientation.diamond
    report = Report(subject="face pairing")
    for e, f in tp.pair_face.items():
        d = gd.edge_dart(e)
        if f not in (gd.face_of[d], gd.face_of[gd.twin[d]]):
            report.add("not_incident", f"face {f} is not incident to edge {e}", witness=[e, f])
            continue
        path = tp.tree_path(gd.target(d), gd.origin[d])
        cycle = {e}
        for k in range(len(path) - 1):
            cycle.add(gd.edge_of[gd.find_dart(path[k], path[k + 1])])
        reached = [False] * gd.num_faces
        reached[gd.outer_face] = True
        queue = deque([gd.outer_face])
        while queue:
            h = queue.popleft()
            for x in gd.face_darts(h):
                if gd.edge_of[x] in cycle:
                    continue
                other = gd.face_of[gd.twin[x]]
                if not reached[other]:
                    reached[other] = True
                    queue.append(other)
        if reached[f]:
            report.add("outside_cycle", f"face {f} paired with edge {e} lies outside its cycle", witness=[e, f])
    return report


def assemble(tp: TreePairing, c: Completion) -> FiveCOrientation:
    """
    Orient G+ around each edge-vertex: inside the face s of G⋄ holding x_s,
    x_s points to t_s and receives its three other edges; each outer
    edge-vertex x_i points to b_i.

    Raises:
        AssemblyError: the result fails O0/O1
    """
    b = tp.orientation
    t = b.triangulation
    g = t.map
    gd = b.diamond
    gp = c.map
    n = t.n

    def completion_vertex(v: int) -> int:
        return v if v < n else c.dual_vertex[b.face_of_vertex(v)]

    out = [False] * gp.num_darts
    for s in range(gd.num_faces):
        if s == gd.outer_face:
            continue
        primal = [v for v in gd.face_vertices(s) if v < n]
        e = g.edge_of[g.find_dart(primal[0], primal[1])]
        x = c.edge_vertex[e]
        head = completion_vertex(tp.t_s[s])
        for d in gp.vertex_darts(x):
            if gp.target(d) == head:
                out[d] = True
            else:
                out[gp.twin[d]] = True
    for i, x in enumerate(c.outer_edge_vertices):
        d = gp.find_dart(x, c.boundary_duals[i])
        out[d] = True

    o = FiveCOrientation(c, out)
    report = validate_orientation(o)
    if not report.ok:
        raise AssemblyError(report.summary(), witness=report.violations[0].witness)
    return o


def _is_simple(t: FiveTriangulation) -> bool:
    g = t.map
    for v in range(t.n):
        neighbours = g.neighbors(v)
        if v in neighbours or len(set(neighbours)) != len(neighbours):
            return False
    return True


def construct_5c(t: FiveTriangulation, c: Optional[Completion] = None) -> FiveCOrientation:
    """
    Compute a 5c-orientation of t.

    Raises:
        Not5c: t admits none; ``provenance`` names the failing stage and the
            witness is a short separating cycle found by is_5c
    """
    if not _is_simple(t):
        verdict = is_5c(t)
        raise Not5c("triangulation has a loop or a multiple edge", provenance="input", witness=verdict.model_dump())
    c = c or completion(t)
    try:
        q = augment(t)
        a = regular_orientation(q)
        b = orientation_b(q, a)
        tp = spanning_tree(b)
        o = assemble(tp, c)
    except ConstructionError as e:
        verdict = is_5c(t)
        if verdict.ok:
            logger.error(f"Construction failed on a 5c input at stage {e.code}: {e.message}")
            raise
        logger.warning(f"No 5c-orientation: {e.code} ({verdict.reason} {verdict.cycle})")
        raise Not5c(f"no 5c-orientation: {e.message}", provenance=e.code, witness=verdict.model_dump()) from e
    logger.info(f"Constructed 5c-orientation for n={t.n}")
    return o
