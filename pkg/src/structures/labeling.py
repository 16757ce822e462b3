"""
5c-labelings of the inner corners of a 5-triangulation, and the bijection
with 5c-orientations.

Labels are stored as 0..4 (label i+1 in the usual 1..5 numbering); outer
corners carry ``None``.
"""

import logging
from collections import deque
from typing import List, Optional

from src.core.errors import InvalidLabeling, PropagationConflict
from src.core.report import Report
from src.structures.orientation import FiveCOrientation, validate_orientation
from src.triangulation5.derived import Completion, completion
from src.triangulation5.triangulation import FiveTriangulation

logger = logging.getLogger("fivec")


class CornerLabeling:
    """Label per corner of G, indexed by dart."""

    def __init__(self, t: FiveTriangulation, label: List[Optional[int]]):
        self.triangulation = t
        self.label = list(label)

    def external(self, c: int) -> Optional[int]:
        value = self.label[c]
        return None if value is None else value + 1

    def jump(self, a: int, b: int) -> int:
        return (self.label[b] - self.label[a]) % 5

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CornerLabeling):
            return NotImplemented
        return self.label == other.label

    def __repr__(self) -> str:
        return f"CornerLabeling(n={self.triangulation.n})"


def validate_labeling(l: CornerLabeling) -> Report:
    """Check conditions L0, L1, L2 and the jump sum around every inner edge."""
    t = l.triangulation
    g = t.map
    label = l.label
    report = Report(subject="5c-labeling")
    if len(label) != g.num_darts:
        report.add("table_size", f"expected {g.num_darts} corner labels, got {len(label)}")
        return report

    for c in range(g.num_darts):
        inner = t.is_inner_corner(c)
        if inner and (label[c] is None or not 0 <= label[c] <= 4):
            report.add("label_range", f"inner corner {c} has label {label[c]}", witness=c)
        elif not inner and label[c] is not None:
            report.add("outer_corner_labeled", f"outer corner {c} carries a label", witness=c)
    if not report.ok:
        return report

    for i, v in enumerate(t.outer_vertices):
        for c in g.vertex_darts(v):
            if t.is_inner_corner(c) and label[c] != i:
                report.add("L0", f"corner {c} at v{i + 1} has label {label[c] + 1}", witness=c)

    for v in t.inner_vertices():
        darts = g.vertex_darts(v)
        jumps = [l.jump(darts[k], darts[(k + 1) % len(darts)]) for k in range(len(darts))]
        if any(j > 1 for j in jumps) or sum(jumps) != 5:
            report.add("L1", f"labels around vertex {v} do not form 5 clockwise intervals", witness=v)

    sigma_inv, twin = g.sigma_inv, g.twin
    for f in t.inner_faces:
        start = twin[g.face_darts(f)[0]]
        corners = [start, sigma_inv[twin[start]]]
        corners.append(sigma_inv[twin[corners[1]]])
        jumps = sorted(l.jump(corners[k], corners[(k + 1) % 3]) for k in range(3))
        if jumps != [1, 2, 2]:
            report.add("L2", f"clockwise jumps around face {f} are {jumps}", witness=f)

    for e in range(g.num_edges):
        d = g.edge_dart(e)
        if not t.is_inner_dart[d]:
            continue
        ring = [sigma_inv[d], d, sigma_inv[twin[d]], twin[d]]
        total = sum(l.jump(ring[k], ring[(k + 1) % 4]) for k in range(4))
        if total != 5:
            report.add("edge_jumps", f"jumps around edge {e} sum to {total}", witness=e)
    return report


def phi(l: CornerLabeling, c: Optional[Completion] = None) -> FiveCOrientation:
    """
    Orientation of G+ read off a 5c-labeling.

    The edge between a primal vertex v and x_e points toward v when the two
    corners of v beside e have the same label. The edge between a dual
    vertex f and x_e points toward f when the label jumps by 1 from the
    corner f- to the corner f+ of f at the ends of e.

    Raises:
        InvalidLabeling: l is not a 5c-labeling
    """
    report = validate_labeling(l)
    if not report.ok:
        raise InvalidLabeling(report.summary(), witness=report.violations[0].witness)
    t = l.triangulation
    g = t.map
    c = c or completion(t)
    gp = c.map
    label = l.label
    out = [False] * gp.num_darts
    for d in range(g.num_darts):
        if t.is_inner_dart[d]:
            p = c.primal_dart[d]
            toward_origin = label[g.sigma_inv[d]] == label[d]
            out[p], out[gp.twin[p]] = not toward_origin, toward_origin
        x = c.dual_dart[d]
        if x >= 0:
            toward_face = (label[g.sigma_inv[d]] - label[g.twin[d]]) % 5 == 1
            out[x], out[gp.twin[x]] = not toward_face, toward_face
    return FiveCOrientation(c, out)


def phi_inv(o: FiveCOrientation) -> CornerLabeling:
    """
    Corner labels propagated over the corner graph from the outer vertices.

    A clockwise step around a vertex adds 1 when the edge-vertex edge it
    crosses leaves the vertex, 0 otherwise; a clockwise step around a face
    adds 1 when the dual edge it crosses points into the face, 2 otherwise.
    Every arc of the corner graph is checked.

    Raises:
        PropagationConflict: two propagated labels disagree, a corner is
            unreachable, or the result is not a 5c-labeling
    """
    t = o.triangulation
    g = t.map
    sigma, sigma_inv, twin = g.sigma, g.sigma_inv, g.twin
    label: List[Optional[int]] = [None] * g.num_darts
    queue = deque()
    for i, v in enumerate(t.outer_vertices):
        for c in g.vertex_darts(v):
            if t.is_inner_corner(c):
                label[c] = i
                queue.append(c)

    while queue:
        c = queue.popleft()
        steps = []
        nxt = sigma[c]
        if t.is_inner_corner(nxt):
            steps.append((nxt, 1 if o.primal_out(nxt) else 0))
        steps.append((sigma_inv[twin[c]], 1 if o.dual_toward_face(twin[c]) else 2))
        for nxt, weight in steps:
            expected = (label[c] + weight) % 5
            if label[nxt] is None:
                label[nxt] = expected
                queue.append(nxt)
            elif label[nxt] != expected:
                raise PropagationConflict(
                    f"corner {nxt} gets label {label[nxt] + 1} and {expected + 1}",
                    witness=[c, nxt],
                )

    missing = [c for c in range(g.num_darts) if t.is_inner_corner(c) and label[c] is None]
    if missing:
        raise PropagationConflict(f"{len(missing)} corner(s) never reached", witness=missing[:10])
    result = CornerLabeling(t, label)
    report = validate_labeling(result)
    if not report.ok:
        bad = validate_orientation(o)
        hint = "" if bad.ok else f" (orientation: {bad.summary(3)})"
        raise PropagationConflict(report.summary(3) + hint, witness=report.violations[0].witness)
    return result
