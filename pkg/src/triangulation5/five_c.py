"""
The 5c predicate: every cycle of length 3 or 4 encloses no vertex.

``is_5c`` decides it locally. A 3-cycle is harmless exactly when it bounds
an inner face; a 4-cycle w-x-y-z is harmless exactly when one of its
diagonals is an edge splitting it into two inner faces. ``is_5c_bruteforce``
is the independent oracle: it enumerates the same cycles and flood-fills
faces from the outer face to find enclosed vertices.
"""

import logging
from collections import defaultdict, deque
from typing import FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple
from pydantic import BaseModel, Field

from src.triangulation5.triangulation import FiveTriangulation

logger = logging.getLogger("fivec")


class FiveCVerdict(BaseModel):
    """Result of the 5c test; a failed test carries a witness."""
    ok: bool
    cycle: List[int] = Field(default_factory=list)
    enclosed: Optional[int] = None
    reason: str = ""


def enclosed_vertices(t: FiveTriangulation, blocked_edges: Set[int], cycle: Sequence[int]) -> List[int]:
    """
    Vertices separated from the outer face by a set of edges.

    Faces are flooded from the outer face across every edge not in
    ``blocked_edges``. A vertex off the cycle is enclosed when none of its
    incident faces was reached.
    """
    m = t.map
    reached = [False] * m.num_faces
    reached[m.outer_face] = True
    queue = deque([m.outer_face])
    edge_of, twin, face_of = m.edge_of, m.twin, m.face_of
    while queue:
        f = queue.popleft()
        for d in m.face_darts(f):
            if edge_of[d] in blocked_edges:
                continue
            g = face_of[twin[d]]
            if not reached[g]:
                reached[g] = True
                queue.append(g)
    on_cycle = set(cycle)
    result = []
    for v in range(t.n):
        if v in on_cycle:
            continue
        if not any(reached[m.corner_face(d)] for d in m.vertex_darts(v)):
            result.append(v)
    return result


def _cycle_edges(t: FiveTriangulation, cycle: Sequence[int]) -> Set[int]:
    m = t.map
    k = len(cycle)
    return {m.edge_of[m.find_dart(cycle[j], cycle[(j + 1) % k])] for j in range(k)}


def _witness(t: FiveTriangulation, cycle: List[int], reason: str) -> FiveCVerdict:
    inside = enclosed_vertices(t, _cycle_edges(t, cycle), cycle)
    return FiveCVerdict(ok=False, cycle=cycle, enclosed=inside[0] if inside else None, reason=reason)


def _multiplicity_defect(t: FiveTriangulation) -> Optional[FiveCVerdict]:
    m = t.map
    for v in range(t.n):
        seen = {}
        for d in m.vertex_darts(v):
            w = m.target(d)
            if w == v:
                inside = enclosed_vertices(t, {m.edge_of[d]}, [v])
                return FiveCVerdict(ok=False, cycle=[v], enclosed=inside[0] if inside else None, reason="loop")
            if w in seen:
                blocked = {m.edge_of[seen[w]], m.edge_of[d]}
                inside = enclosed_vertices(t, blocked, [v, w])
                return FiveCVerdict(ok=False, cycle=[v, w], enclosed=inside[0] if inside else None, reason="multiple edge")
            seen[w] = d
    return None


def _neighbor_sets(t: FiveTriangulation) -> List[Set[int]]:
    return [set(t.map.neighbors(v)) for v in range(t.n)]


def _inner_face_keys(t: FiveTriangulation) -> Set[FrozenSet[int]]:
    return {frozenset(t.map.face_vertices(f)) for f in t.inner_faces}


def triangles(nbrs: List[Set[int]]) -> Iterator[Tuple[int, int, int]]:
    """All 3-cycles a < b < c."""
    for a in range(len(nbrs)):
        for b in sorted(w for w in nbrs[a] if w > a):
            for c in sorted(w for w in nbrs[a] & nbrs[b] if w > b):
                yield a, b, c


def quadrilaterals(nbrs: List[Set[int]]) -> Iterator[Tuple[int, int, int, int]]:
    """4-cycles w-x-y-z, each listed once per diagonal pair (w, y) with w < y."""
    for w in range(len(nbrs)):
        common = defaultdict(list)
        for x in sorted(nbrs[w]):
            for y in nbrs[x]:
                if y > w:
                    common[y].append(x)
        for y in sorted(common):
            xs = common[y]
            for i in range(len(xs)):
                for j in range(i + 1, len(xs)):
                    yield w, xs[i], y, xs[j]


def is_5c(t: FiveTriangulation) -> FiveCVerdict:
    """
    Decide whether t is a 5c-triangulation.

    Returns:
        FiveCVerdict; on failure ``cycle`` is a short cycle and ``enclosed``
        one of the vertices inside it
    """
    defect = _multiplicity_defect(t)
    if defect is not None:
        return defect
    nbrs = _neighbor_sets(t)
    face_keys = _inner_face_keys(t)

    def is_face(a: int, b: int, c: int) -> bool:
        return frozenset((a, b, c)) in face_keys

    for a, b, c in triangles(nbrs):
        if not is_face(a, b, c):
            logger.debug(f"Separating triangle {a}-{b}-{c}")
            return _witness(t, [a, b, c], "separating triangle")

    for w, x, y, z in quadrilaterals(nbrs):
        if y in nbrs[w] and is_face(w, x, y) and is_face(w, y, z):
            continue
        if z in nbrs[x] and is_face(x, y, z) and is_face(x, z, w):
            continue
        logger.debug(f"Separating 4-cycle {w}-{x}-{y}-{z}")
        return _witness(t, [w, x, y, z], "separating 4-cycle")

    return FiveCVerdict(ok=True)


def is_5c_bruteforce(t: FiveTriangulation) -> FiveCVerdict:
    """Oracle: flood-fill the interior of every 3- and 4-cycle."""
    defect = _multiplicity_defect(t)
    if defect is not None:
        return defect
    nbrs = _neighbor_sets(t)
    for cycle in triangles(nbrs):
        inside = enclosed_vertices(t, _cycle_edges(t, cycle), cycle)
        if inside:
            return FiveCVerdict(ok=False, cycle=list(cycle), enclosed=inside[0], reason="separating triangle")
    for cycle in quadrilaterals(nbrs):
        inside = enclosed_vertices(t, _cycle_edges(t, cycle), cycle)
        if inside:
            return FiveCVerdict(ok=False, cycle=list(cycle), enclosed=inside[0], reason="separating 4-cycle")
    return FiveCVerdict(ok=True)
