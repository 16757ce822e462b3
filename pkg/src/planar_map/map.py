"""
Permutation-encoded planar maps.

A map on 2E darts is given by three tables: ``twin`` pairs the two darts of
an edge, ``sigma`` gives the next dart clockwise around the origin vertex and
``origin`` gives the vertex a dart leaves from. Faces are the orbits of
``face_next(d) = sigma[twin[d]]``. With this convention every face lies on
the left of its darts: inner faces are walked counterclockwise and the outer
face is walked clockwise, so the outer pentagon of a 5-triangulation is
visited as v1, v2, v3, v4, v5.

The corner of a dart ``d`` is the sector between ``d`` and ``sigma[d]`` at
``origin[d]``; it lies in the face on the right of ``d``, which is
``face_of[twin[d]]``.
"""

import logging
from collections import defaultdict, deque
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from src.core.errors import (
    Disconnected,
    InconsistentRotation,
    NonPlanar,
    OuterFaceNotFound,
)
from src.core.report import Report

logger = logging.getLogger("fivec")


class FaceOrbit(NamedTuple):
    index: int
    darts: List[int]
    is_outer: bool


class PlanarMap:
    """Embedded connected multigraph on the sphere with a designated outer face."""

    def __init__(
        self,
        twin: Sequence[int],
        sigma: Sequence[int],
        origin: Sequence[int],
        outer_dart: int = 0,
        num_vertices: Optional[int] = None,
    ):
        self.twin: List[int] = list(twin)
        self.sigma: List[int] = list(sigma)
        self.origin: List[int] = list(origin)
        self.outer_dart = outer_dart
        if num_vertices is None:
            num_vertices = max(self.origin) + 1 if self.origin else 0
        self._num_vertices = num_vertices

        self.first_dart: List[int] = [-1] * num_vertices
        for d, v in enumerate(self.origin):
            if 0 <= v < num_vertices and self.first_dart[v] < 0:
                self.first_dart[v] = d

        self._sigma_inv: Optional[List[int]] = None
        self._face_of: Optional[List[int]] = None
        self._face_darts: Optional[List[List[int]]] = None
        self._edge_of: Optional[List[int]] = None
        self._edge_darts: Optional[List[int]] = None
        self._dart_index: Optional[Dict[Tuple[int, int], int]] = None

    # sizes

    @property
    def num_darts(self) -> int:
        return len(self.twin)

    @property
    def num_edges(self) -> int:
        return len(self.twin) // 2

    @property
    def num_vertices(self) -> int:
        return self._num_vertices

    @property
    def num_faces(self) -> int:
        return len(self._faces())

    # darts

    @property
    def sigma_inv(self) -> List[int]:
        if self._sigma_inv is None:
            inv = [0] * len(self.sigma)
            for d, s in enumerate(self.sigma):
                inv[s] = d
            self._sigma_inv = inv
        return self._sigma_inv

    def target(self, d: int) -> int:
        return self.origin[self.twin[d]]

    def face_next(self, d: int) -> int:
        return self.sigma[self.twin[d]]

    def vertex_darts(self, v: int) -> List[int]:
        """Darts leaving v in clockwise order, starting at its first dart."""
        start = self.first_dart[v]
        if start < 0:
            return []
        darts = [start]
        d = self.sigma[start]
        while d != start:
            darts.append(d)
            d = self.sigma[d]
        return darts

    def degree(self, v: int) -> int:
        return len(self.vertex_darts(v))

    def neighbors(self, v: int) -> List[int]:
        return [self.target(d) for d in self.vertex_darts(v)]

    def dart_position(self, d: int) -> int:
        """Index of d in the clockwise rotation of its origin."""
        k = 0
        e = self.first_dart[self.origin[d]]
        while e != d:
            e = self.sigma[e]
            k += 1
        return k

    def dart_at(self, v: int, k: int) -> int:
        d = self.first_dart[v]
        for _ in range(k):
            d = self.sigma[d]
        return d

    def find_dart(self, u: int, v: int) -> int:
        """First dart from u to v, or -1 when u and v are not adjacent."""
        if self._dart_index is None:
            index: Dict[Tuple[int, int], int] = {}
            for d in range(len(self.twin)):
                key = (self.origin[d], self.target(d))
                if key not in index:
                    index[key] = d
            self._dart_index = index
        return self._dart_index.get((u, v), -1)

    # edges

    def _edges(self) -> None:
        edge_of = [-1] * len(self.twin)
        edge_darts: List[int] = []
        for d in range(len(self.twin)):
            if edge_of[d] < 0:
                edge_of[d] = edge_of[self.twin[d]] = len(edge_darts)
                edge_darts.append(d)
        self._edge_of = edge_of
        self._edge_darts = edge_darts

    @property
    def edge_of(self) -> List[int]:
        if self._edge_of is None:
            self._edges()
        return self._edge_of

    def edge_dart(self, e: int) -> int:
        """Lower-numbered dart of edge e."""
        if self._edge_darts is None:
            self._edges()
        return self._edge_darts[e]

    # faces

    def _faces(self) -> List[List[int]]:
        if self._face_darts is None:
            face_of = [-1] * len(self.twin)
            face_darts: List[List[int]] = []
            sigma, twin = self.sigma, self.twin
            for d in range(len(twin)):
                if face_of[d] >= 0:
                    continue
                f = len(face_darts)
                orbit = []
                e = d
                while face_of[e] < 0:
                    face_of[e] = f
                    orbit.append(e)
                    e = sigma[twin[e]]
                face_darts.append(orbit)
            self._face_of = face_of
            self._face_darts = face_darts
        return self._face_darts

    @property
    def face_of(self) -> List[int]:
        self._faces()
        return self._face_of

    @property
    def outer_face(self) -> int:
        return self.face_of[self.outer_dart]

    def face_darts(self, f: int) -> List[int]:
        return self._faces()[f]

    def face_vertices(self, f: int) -> List[int]:
        return [self.origin[d] for d in self._faces()[f]]

    def face_degree(self, f: int) -> int:
        return len(self._faces()[f])

    def corner_face(self, c: int) -> int:
        """Face containing the corner of dart c."""
        return self.face_of[self.twin[c]]

    # derived copies

    def with_outer(self, outer_dart: int) -> "PlanarMap":
        other = PlanarMap.__new__(PlanarMap)
        other.__dict__.update(self.__dict__)
        other.outer_dart = outer_dart
        return other

    def rotation_system(self) -> List[List[int]]:
        return [self.neighbors(v) for v in range(self._num_vertices)]

    def __repr__(self) -> str:
        return f"PlanarMap(V={self.num_vertices}, E={self.num_edges}, darts={self.num_darts})"


def faces(m: PlanarMap) -> List[FaceOrbit]:
    """Face orbits of m, each a dart cycle, with the outer face flagged."""
    outer = m.outer_face
    return [FaceOrbit(f, list(orbit), f == outer) for f, orbit in enumerate(m._faces())]


def assemble_rotation_system(rot: Sequence[Sequence[int]]) -> PlanarMap:
    """
    Build a map from clockwise neighbour lists without planarity checks.

    The k-th occurrence of v in the list of u is paired with the k-th
    occurrence of u counted from the end of the list of v; a loop at v is
    formed by consecutive occurrences of v in its own list.

    Raises:
        InconsistentRotation: if u lists v a different number of times than
            v lists u, or a neighbour id is out of range
    """
    n = len(rot)
    origin: List[int] = []
    first: List[int] = [0] * n
    occurrences: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for v, neighbours in enumerate(rot):
        first[v] = len(origin)
        for w in neighbours:
            if not 0 <= w < n:
                raise InconsistentRotation(f"vertex {v} lists unknown vertex {w}", witness=[v, w])
            occurrences[(v, w)].append(len(origin))
            origin.append(v)

    sigma = [0] * len(origin)
    for v, neighbours in enumerate(rot):
        k = len(neighbours)
        for j in range(k):
            sigma[first[v] + j] = first[v] + (j + 1) % k

    twin = [-1] * len(origin)
    for (u, w), darts in occurrences.items():
        if u == w:
            if len(darts) % 2:
                raise InconsistentRotation(f"vertex {u} lists itself an odd number of times", witness=[u])
            for j in range(0, len(darts), 2):
                twin[darts[j]] = darts[j + 1]
                twin[darts[j + 1]] = darts[j]
            continue
        partner = occurrences.get((w, u), [])
        if len(partner) != len(darts):
            raise InconsistentRotation(
                f"vertex {u} lists {w} {len(darts)} time(s) but {w} lists {u} {len(partner)} time(s)",
                witness=[u, w],
            )
        if u < w:
            for a, b in zip(darts, reversed(partner)):
                twin[a] = b
                twin[b] = a

    return PlanarMap(twin, sigma, origin, outer_dart=0, num_vertices=n)


def _unreached_vertex(m: PlanarMap) -> int:
    if m.num_vertices == 0:
        return -1
    seen = [False] * m.num_vertices
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for d in m.vertex_darts(v):
            w = m.target(d)
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    for v, flag in enumerate(seen):
        if not flag:
            return v
    return -1


def find_face_dart(m: PlanarMap, cycle: Sequence[int]) -> int:
    """Dart starting the face walk that visits ``cycle`` in order, or -1."""
    k = len(cycle)
    if k == 0:
        return -1
    for d in m.vertex_darts(cycle[0]):
        if k > 1 and m.target(d) != cycle[1]:
            continue
        walk = [d]
        e = m.face_next(d)
        while e != d and len(walk) <= k:
            walk.append(e)
            e = m.face_next(e)
        if len(walk) == k and [m.origin[x] for x in walk] == list(cycle):
            return d
    return -1


def build_from_rotation_system(rot: Sequence[Sequence[int]], outer: Sequence[int]) -> PlanarMap:
    """
    Build a validated planar map from clockwise rotations and an outer cycle.

    Args:
        rot: per-vertex clockwise neighbour lists
        outer: vertex cycle of the outer face, in face-walk order

    Returns:
        PlanarMap whose outer_dart starts the walk of ``outer``

    Raises:
        InconsistentRotation, Disconnected, NonPlanar, OuterFaceNotFound
    """
    m = assemble_rotation_system(rot)
    if m.num_vertices > 1 and any(len(neighbours) == 0 for neighbours in rot):
        isolated = next(v for v, neighbours in enumerate(rot) if not neighbours)
        raise Disconnected(f"vertex {isolated} is isolated", witness=[isolated])
    missing = _unreached_vertex(m)
    if missing >= 0:
        raise Disconnected(f"vertex {missing} is not reachable from vertex 0", witness=[missing])
    euler = m.num_vertices - m.num_edges + m.num_faces
    if euler != 2:
        raise NonPlanar(
            f"Euler relation fails: V - E + F = {m.num_vertices} - {m.num_edges} + {m.num_faces} = {euler}",
            witness=euler,
        )
    d = find_face_dart(m, outer)
    if d < 0:
        raise OuterFaceNotFound(f"no face walk visits {list(outer)}", witness=list(outer))
    logger.debug(f"Built map with V={m.num_vertices}, E={m.num_edges}, F={m.num_faces}")
    return m.with_outer(d)


def validate(m: PlanarMap) -> Report:
    """Check every map invariant and list each violation."""
    report = Report(subject="planar map")
    n_darts = m.num_darts
    if len(m.sigma) != n_darts or len(m.origin) != n_darts:
        report.add("table_sizes", "twin, sigma and origin differ in length")
        return report

    twin_ok = True
    for d, t in enumerate(m.twin):
        if not 0 <= t < n_darts:
            report.add("twin_range", f"twin of dart {d} is out of range", witness=d)
            twin_ok = False
        elif t == d:
            report.add("twin_fixed_point", "twin not fixed-point-free", witness=d)
            twin_ok = False
        elif m.twin[t] != d:
            report.add("twin_not_involution", f"twin(twin({d})) != {d}", witness=d)
            twin_ok = False

    sigma_ok = sorted(m.sigma) == list(range(n_darts))
    if not sigma_ok:
        report.add("sigma_not_permutation", "sigma is not a permutation of the darts")
    else:
        for d, s in enumerate(m.sigma):
            if m.origin[s] != m.origin[d]:
                report.add("origin_inconsistent", f"darts {d} and sigma({d}) have different origins", witness=d)

    if not (twin_ok and sigma_ok):
        return report

    missing = _unreached_vertex(m)
    if missing >= 0:
        report.add("disconnected", f"vertex {missing} is not reachable from vertex 0", witness=missing)
    euler = m.num_vertices - m.num_edges + m.num_faces
    if euler != 2:
        report.add("euler", f"Euler relation fails: V - E + F = {euler} (genus > 0)", witness=euler)
    if not 0 <= m.outer_dart < n_darts:
        report.add("outer_dart", "outer face is not designated")
    return report
