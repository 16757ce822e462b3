"""
5c-orientations of the primal-dual completion G+.

Only inner edges of G+ are oriented. An orientation is stored as one flag
per G+ dart: ``out[d]`` is True when the edge of d is directed from
origin(d) to target(d).
"""

import logging
from collections import deque
from typing import List, Optional, Tuple

from src.core.report import Report
from src.triangulation5.derived import Completion, Role
from src.triangulation5.triangulation import FiveTriangulation

logger = logging.getLogger("fivec")

_ROLE_NAMES = {Role.PRIMAL: "primal", Role.EDGE: "edge", Role.DUAL: "dual"}


class FiveCOrientation:
    """Orientation of the inner edges of G+."""

    def __init__(self, completion: Completion, out: List[bool]):
        self.completion = completion
        self.out = list(out)

    @property
    def triangulation(self) -> FiveTriangulation:
        return self.completion.triangulation

    def outdegree(self, v: int) -> int:
        return sum(1 for d in self.completion.map.vertex_darts(v) if self.out[d])

    def primal_out(self, d: int) -> bool:
        """The edge from origin(d) to x_e, e the edge of G dart d, leaves origin(d)."""
        return self.out[self.completion.primal_dart[d]]

    def dual_toward_face(self, d: int) -> bool:
        """The edge between x_e and the dual vertex of the face left of G dart d points into that face."""
        x = self.completion.dual_dart[d]
        return x >= 0 and self.out[self.completion.map.twin[x]]

    def directed_edges(self) -> List[Tuple[int, int]]:
        gp = self.completion.map
        return [(gp.origin[d], gp.target(d)) for d in range(gp.num_darts) if self.out[d]]

    def copy(self) -> "FiveCOrientation":
        return FiveCOrientation(self.completion, self.out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiveCOrientation):
            return NotImplemented
        return self.completion is other.completion and self.out == other.out

    def __repr__(self) -> str:
        return f"FiveCOrientation(n={self.triangulation.n}, arcs={sum(self.out)})"


def validate_orientation(o: FiveCOrientation) -> Report:
    """
    Check conditions O0 and O1 and that exactly the inner edges are oriented.

    Returns:
        Report listing every offending vertex or edge
    """
    c = o.completion
    gp = c.map
    report = Report(subject="5c-orientation")
    if len(o.out) != gp.num_darts:
        report.add("table_size", f"expected {gp.num_darts} dart flags, got {len(o.out)}")
        return report

    for d in range(gp.num_darts):
        t = gp.twin[d]
        if d > t:
            continue
        ends = [gp.origin[d], gp.target(d)]
        if c.is_inner_dart[d]:
            if o.out[d] == o.out[t]:
                state = "both directions" if o.out[d] else "no direction"
                report.add("edge_direction", f"inner edge {ends[0]}-{ends[1]} has {state}", witness=ends)
        elif o.out[d] or o.out[t]:
            report.add("outer_edge_oriented", f"outer edge {ends[0]}-{ends[1]} is oriented", witness=ends)

    for v in range(gp.num_vertices):
        got, expected = o.outdegree(v), c.required_outdegree(v)
        if got == expected:
            continue
        role = c.role[v]
        code = "O0" if role == Role.PRIMAL and c.triangulation.is_outer(v) else "O1"
        report.add(
            code,
            f"{_ROLE_NAMES[role]} vertex {v} has outdegree {got}, expected {expected}",
            witness=v,
        )
    return report


def has_ccw_face_cycle(o: FiveCOrientation) -> List[int]:
    """Inner faces of G+ whose boundary is a counterclockwise directed cycle."""
    gp = o.completion.map
    outer = gp.outer_face
    return [
        f for f in range(gp.num_faces)
        if f != outer and all(o.out[d] for d in gp.face_darts(f))
    ]


def _face_potentials(o: FiveCOrientation) -> List[int]:
    gp = o.completion.map
    face_of, twin = gp.face_of, gp.twin
    adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(gp.num_faces)]
    for d in range(gp.num_darts):
        t = twin[d]
        if d > t:
            continue
        if not (o.out[d] or o.out[t]):
            left, right = face_of[d], face_of[t]
            adjacency[left].append((right, 0))
            adjacency[right].append((left, 0))
            continue
        a = d if o.out[d] else t
        left, right = face_of[a], face_of[twin[a]]
        # 0 <= p(left) - p(right) <= 1
        adjacency[right].append((left, 1))
        adjacency[left].append((right, 0))

    dist = [-1] * gp.num_faces
    best = [gp.num_faces + 1] * gp.num_faces
    best[gp.outer_face] = 0
    queue = deque([gp.outer_face])
    while queue:
        f = queue.popleft()
        if dist[f] >= 0:
            continue
        dist[f] = best[f]
        for g, w in adjacency[f]:
            if dist[g] < 0 and best[f] + w < best[g]:
                best[g] = best[f] + w
                if w == 0:
                    queue.appendleft(g)
                else:
                    queue.append(g)
    return dist


def minimize(o: FiveCOrientation) -> FiveCOrientation:
    """
    The minimal 5c-orientation with the same outdegrees as o.

    Orientations with equal outdegrees differ by reversing a set of faces of
    G+, encoded by a face potential. Taking the largest potential that keeps
    the outer face at 0 gives the unique orientation with no counterclockwise
    directed cycle.
    """
    gp = o.completion.map
    face_of, twin = gp.face_of, gp.twin
    dist = _face_potentials(o)
    out = list(o.out)
    reversed_count = 0
    for d in range(gp.num_darts):
        if not o.out[d]:
            continue
        if dist[face_of[d]] - dist[face_of[twin[d]]] == 1:
            out[d], out[twin[d]] = False, True
            reversed_count += 1
    result = FiveCOrientation(o.completion, out)
    leftover = has_ccw_face_cycle(result)
    if leftover:
        logger.warning(f"minimize left counterclockwise faces {leftover[:5]}")
    logger.debug(f"minimize reversed {reversed_count} edge(s)")
    return result


def enumerate_orientations(c: Completion, limit: Optional[int] = None) -> List[FiveCOrientation]:
    """
    All orientations of the inner edges of G+ satisfying O0 and O1.

    Each edge-vertex picks its single outgoing inner edge; a primal or dual
    vertex must be picked by exactly (inner degree - required outdegree)
    edge-vertices. Exponential; meant for small instances.
    """
    gp = c.map
    choices: List[List[int]] = []
    edge_vertices = [v for v in range(gp.num_vertices) if c.role[v] == Role.EDGE]
    need = [0] * gp.num_vertices
    remaining = [0] * gp.num_vertices
    for v in range(gp.num_vertices):
        if c.role[v] == Role.EDGE:
            continue
        inner = sum(1 for d in gp.vertex_darts(v) if c.is_inner_dart[d])
        need[v] = inner - c.required_outdegree(v)
        if need[v] < 0:
            return []
    for x in edge_vertices:
        darts = [d for d in gp.vertex_darts(x) if c.is_inner_dart[d]]
        choices.append(darts)
        for d in darts:
            remaining[gp.target(d)] += 1

    results: List[FiveCOrientation] = []
    picked: List[int] = []

    def record() -> None:
        out = [False] * gp.num_darts
        for darts, chosen in zip(choices, picked):
            for d in darts:
                if d == chosen:
                    out[d] = True
                else:
                    out[gp.twin[d]] = True
        results.append(FiveCOrientation(c, out))

    def search(k: int) -> bool:
        if k == len(choices):
            if all(need[v] == 0 for v in range(gp.num_vertices)):
                record()
                return limit is not None and len(results) >= limit
            return False
        darts = choices[k]
        for d in darts:
            remaining[gp.target(d)] -= 1
        stop = False
        for d in darts:
            w = gp.target(d)
            if need[w] == 0:
                continue
            need[w] -= 1
            feasible = all(need[gp.target(e)] <= remaining[gp.target(e)] for e in darts)
            if feasible:
                picked.append(d)
                stop = search(k + 1)
                picked.pop()
            need[w] += 1
            if stop:
                break
        for d in darts:
            remaining[gp.target(d)] += 1
        return stop

    search(0)
    logger.debug(f"Enumerated {len(results)} orientation(s) over {len(edge_vertices)} edge-vertices")
    return results
