"""
Exact runtime certificates for a drawing: planarity of every inner face,
a segment-intersection oracle, the half-plane and sector properties of the
regions and colored arcs, and rotational symmetry.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.core.config import get_settings
from src.core.errors import NoAutomorphismProvided
from src.core.report import Report
from src.drawing.barycentric import BaryPoint, Drawing, orient3
from src.drawing.exact import dot_anchor_sign, dot_quad
from src.regions.sizes import region_vertices
from src.regions.trees import WoodTrees
from src.structures.wood import WoodColoring

logger = logging.getLogger("fivec")


def certify_planar(d: Drawing) -> Report:
    """
    Every inner face, read in clockwise combinatorial order, must be a
    non-degenerate triangle with the orientation of the anchors V_1 V_2 V_3.
    """
    t = d.triangulation
    report = Report(subject="planarity")
    expected = orient3(BaryPoint.anchor(0), BaryPoint.anchor(1), BaryPoint.anchor(2))
    for f in t.inner_faces:
        a, b, c = t.face_corners_clockwise(f)
        got = orient3(d.point(a), d.point(b), d.point(c))
        if got != expected:
            state = "degenerate" if got == 0 else "flipped"
            report.add("face_not_proper", f"face {f} ({a},{b},{c}) is {state}", witness=f)
    return report


def _dot_sign(p: BaryPoint, q: BaryPoint, r: BaryPoint, s: BaryPoint) -> int:
    """Sign of dot(q - p, s - r)."""
    return dot_quad(q.minus(p), s.minus(r)).sign


def _segments_meet(d: Drawing, e1: Tuple[int, int], e2: Tuple[int, int]) -> bool:
    a, b = (d.point(v) for v in e1)
    c, e = (d.point(v) for v in e2)
    shared = set(e1) & set(e2)
    if shared:
        p = shared.pop()
        x = e1[0] if e1[1] == p else e1[1]
        y = e2[0] if e2[1] == p else e2[1]
        pp, px, py = d.point(p), d.point(x), d.point(y)
        return orient3(pp, px, py) == 0 and _dot_sign(pp, px, pp, py) > 0
    o1, o2 = orient3(a, b, c), orient3(a, b, e)
    o3, o4 = orient3(c, e, a), orient3(c, e, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True

    def on_segment(p: BaryPoint, q: BaryPoint, r: BaryPoint) -> bool:
        return orient3(p, q, r) == 0 and _dot_sign(r, p, r, q) <= 0

    return on_segment(a, b, c) or on_segment(a, b, e) or on_segment(c, e, a) or on_segment(c, e, b)


def segment_crossings(d: Drawing, limit: Optional[int] = None) -> List[Tuple[int, int]]:
    """
    Pairs of edge ids whose segments cross or overlap.

    Float bounding boxes prune the candidate pairs; every candidate is
    decided with exact predicates.
    """
    t = d.triangulation
    g = t.map
    edges = [(g.origin[g.edge_dart(e)], g.target(g.edge_dart(e))) for e in range(g.num_edges)]
    ends = np.array(edges)
    lo = np.minimum(d.coords[ends[:, 0]], d.coords[ends[:, 1]]) - 1e-9
    hi = np.maximum(d.coords[ends[:, 0]], d.coords[ends[:, 1]]) + 1e-9
    found: List[Tuple[int, int]] = []
    for e1 in range(len(edges)):
        overlap = np.all(lo[e1 + 1:] <= hi[e1], axis=1) & np.all(hi[e1 + 1:] >= lo[e1], axis=1)
        for k in np.nonzero(overlap)[0]:
            e2 = e1 + 1 + int(k)
            if _segments_meet(d, edges[e1], edges[e2]):
                found.append((e1, e2))
                if limit is not None and len(found) >= limit:
                    return found
    return found


def check_segments(d: Drawing) -> Report:
    """Segment oracle as a report; skipped above FIVEC_SEGMENT_ORACLE_MAX_VERTICES."""
    report = Report(subject="segment crossings")
    cap = get_settings().FIVEC_SEGMENT_ORACLE_MAX_VERTICES
    if d.n > cap:
        logger.info(f"Skipping segment oracle for n={d.n} > {cap}")
        return report
    for e1, e2 in segment_crossings(d, limit=10):
        report.add("segments_cross", f"edges {e1} and {e2} meet", witness=[e1, e2])
    return report


def check_halfplane(d: Drawing, tr: WoodTrees) -> Report:
    """For u != v in R_i(v): dot(V_i, u - v) < 0, exactly."""
    t = d.triangulation
    report = Report(subject="half-plane")
    for v in range(t.n):
        pv = d.point(v)
        for i in range(5):
            for u in sorted(region_vertices(tr, v, i)):
                if u == v:
                    continue
                if dot_anchor_sign(i, d.point(u).minus(pv)) >= 0:
                    report.add("halfplane", f"vertex {u} in R{i + 1}({v}) is not below {v} along V{i + 1}", witness=[v, u, i])
    return report


def check_sectors(d: Drawing, w: WoodColoring) -> Report:
    """Each colored arc v -> u of color i points into the open sector of half-angle 3pi/10 around V_i."""
    g = d.triangulation.map
    report = Report(subject="sectors")
    for dart, col in enumerate(w.color):
        if col is None:
            continue
        v, u = g.origin[dart], g.target(dart)
        delta = d.point(u).minus(d.point(v))
        for side in ((col - 2) % 5, (col + 2) % 5):
            if dot_anchor_sign(side, delta) >= 0:
                report.add(
                    "sector",
                    f"arc {v}->{u} of color {col + 1} is not below V{side + 1}",
                    witness=[v, u, col],
                )
    return report


def check_rotational_symmetry(d: Drawing, perm: Optional[Sequence[int]] = None) -> Report:
    """
    The image of every vertex carries the weights of the vertex shifted by one color.

    Raises:
        NoAutomorphismProvided: neither ``perm`` nor the triangulation's automorphism is set
    """
    t = d.triangulation
    perm = perm if perm is not None else t.automorphism
    if perm is None:
        raise NoAutomorphismProvided("the instance has no order-5 automorphism attached")
    report = Report(subject="rotational symmetry")
    for v in range(t.n):
        own = d.point(v).weights()
        image = d.point(perm[v]).weights()
        if any(image[(k + 1) % 5] != own[k] for k in range(5)):
            report.add("not_symmetric", f"vertex {v} and its image {perm[v]} break the color shift", witness=[v, perm[v]])
    return report
