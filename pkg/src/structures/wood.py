"""
5c-woods: partial colorings of the inner arcs of a 5-triangulation.

Colors are stored as 0..4 (color i+1 in the usual numbering); an uncolored
arc carries ``None``.
"""

import logging
from bisect import bisect_left, bisect_right
from typing import Dict, List, Optional, Sequence

from src.core.errors import InvalidLabeling, InvalidWood, NonterminatingPath
from src.core.report import Report
from src.structures.labeling import CornerLabeling, phi_inv, validate_labeling
from src.structures.orientation import FiveCOrientation
from src.triangulation5.triangulation import FiveTriangulation

logger = logging.getLogger("fivec")


class WoodColoring:
    """Color per dart of G; only inner arcs may be colored."""

    def __init__(self, t: FiveTriangulation, color: List[Optional[int]]):
        self.triangulation = t
        self.color = list(color)

    def colored_out(self, v: int) -> Dict[int, int]:
        """Color -> outgoing colored dart at v."""
        return {self.color[d]: d for d in self.triangulation.map.vertex_darts(v) if self.color[d] is not None}

    def arcs_of_color(self, i: int) -> List[int]:
        return [d for d, col in enumerate(self.color) if col == i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WoodColoring):
            return NotImplemented
        return self.color == other.color

    def __repr__(self) -> str:
        colored = sum(1 for col in self.color if col is not None)
        return f"WoodColoring(n={self.triangulation.n}, colored={colored})"


def validate_wood(w: WoodColoring) -> Report:
    """Check conditions W0 to W3 literally."""
    t = w.triangulation
    g = t.map
    color = w.color
    report = Report(subject="5c-wood")
    if len(color) != g.num_darts:
        report.add("table_size", f"expected {g.num_darts} arc colors, got {len(color)}")
        return report

    for d, col in enumerate(color):
        if col is None:
            continue
        if not 0 <= col <= 4 or not t.is_inner_dart[d]:
            report.add("color_range", f"arc {d} has color {col} and inner={t.is_inner_dart[d]}", witness=d)
    if not report.ok:
        return report

    for d, col in enumerate(color):
        if col is None:
            continue
        tail, head = g.origin[d], g.target(d)
        if t.is_outer(tail):
            report.add("W0", f"arc {tail}->{head} leaves an outer vertex but has color {col + 1}", witness=d)
        elif t.is_outer(head) and t.outer_index[head] != col:
            report.add("W0", f"arc {tail}->{head} into v{t.outer_index[head] + 1} has color {col + 1}", witness=d)

    # last[d]: color of the latest colored out-arc at or before d, clockwise
    last: List[Optional[int]] = [None] * g.num_darts
    w1_ok = set()
    for v in t.inner_vertices():
        darts = g.vertex_darts(v)
        colors = [color[d] for d in darts if color[d] is not None]
        if len(colors) != 5 or any((colors[(k + 1) % 5] - colors[k]) % 5 != 1 for k in range(5)):
            report.add("W1", f"vertex {v} has outgoing colors {[x + 1 for x in colors]}", witness=v)
            continue
        w1_ok.add(v)
        k0 = next(k for k, d in enumerate(darts) if color[d] is not None)
        current = None
        for k in range(len(darts)):
            d = darts[(k0 + k) % len(darts)]
            if color[d] is not None:
                current = color[d]
            last[d] = current

    for d, col in enumerate(color):
        if col is None:
            continue
        head = g.target(d)
        if head not in w1_ok:
            continue
        back = g.twin[d]
        lower, upper = (col + 2) % 5, (col + 3) % 5
        if last[back] != lower and color[back] != upper:
            report.add("W2", f"arc into {head} of color {col + 1} is not between colors {lower + 1} and {upper + 1}", witness=d)

    for e in range(g.num_edges):
        d = g.edge_dart(e)
        if t.is_inner_dart[d] and color[d] is None and color[g.twin[d]] is None:
            report.add("W3", f"inner edge {g.origin[d]}-{g.target(d)} has no color", witness=e)
    return report


def theta(l: CornerLabeling) -> WoodColoring:
    """
    Wood read off a 5c-labeling: an arc is colored i when its left and right
    corners at the origin are labeled i+2 and i+3, uncolored when they are equal.

    Raises:
        InvalidLabeling
    """
    report = validate_labeling(l)
    if not report.ok:
        raise InvalidLabeling(report.summary(), witness=report.violations[0].witness)
    t = l.triangulation
    g = t.map
    color: List[Optional[int]] = [None] * g.num_darts
    for d in range(g.num_darts):
        if not t.is_inner_dart[d]:
            continue
        left, right = l.label[g.sigma_inv[d]], l.label[d]
        if left == right:
            continue
        if (right - left) % 5 != 1:
            raise InvalidLabeling(f"labels {left + 1},{right + 1} beside arc {d} jump by {(right - left) % 5}", witness=d)
        color[d] = (left - 2) % 5
    return WoodColoring(t, color)


def theta_inv(w: WoodColoring) -> CornerLabeling:
    """
    Labeling of a 5c-wood: a corner of an inner vertex between the outgoing
    arcs of colors i+2 and i+3 gets label i; corners at v_i get i.

    Raises:
        InvalidWood
    """
    report = validate_wood(w)
    if not report.ok:
        raise InvalidWood(report.summary(), witness=report.violations[0].witness)
    t = w.triangulation
    g = t.map
    label: List[Optional[int]] = [None] * g.num_darts
    for i, v in enumerate(t.outer_vertices):
        for c in g.vertex_darts(v):
            if t.is_inner_corner(c):
                label[c] = i
    for v in t.inner_vertices():
        darts = g.vertex_darts(v)
        k0 = next(k for k, d in enumerate(darts) if w.color[d] is not None)
        current = w.color[darts[k0]]
        for k in range(len(darts)):
            d = darts[(k0 + k) % len(darts)]
            if w.color[d] is not None:
                current = w.color[d]
            label[d] = (current - 2) % 5
    return CornerLabeling(t, label)


class _OutgoingIndex:
    """Positions of the outgoing arcs in the clockwise rotation of every inner vertex."""

    def __init__(self, o: FiveCOrientation):
        t = o.triangulation
        g = t.map
        self.orientation = o
        self.position = [0] * g.num_darts
        self.darts: Dict[int, List[int]] = {}
        self.outs: Dict[int, List[int]] = {}
        for v in t.inner_vertices():
            darts = g.vertex_darts(v)
            for k, d in enumerate(darts):
                self.position[d] = k
            self.darts[v] = darts
            self.outs[v] = [k for k, d in enumerate(darts) if o.primal_out(d)]

    def third_out(self, start: int, clockwise: bool) -> int:
        """Third outgoing arc strictly after ``start`` around its origin."""
        v = self.orientation.triangulation.map.origin[start]
        outs = self.outs[v]
        if len(outs) - int(self.orientation.primal_out(start)) < 3:
            raise NonterminatingPath(f"fewer than 3 outgoing arcs around dart {start}", witness=start)
        p = self.position[start]
        k = bisect_right(outs, p) + 2 if clockwise else bisect_left(outs, p) - 3
        return self.darts[v][outs[k % len(outs)]]


def psi(o: FiveCOrientation) -> WoodColoring:
    """
    Wood obtained by the straight-path rule.

    Every arc whose edge-vertex edge leaves its origin starts a path. At an
    inner vertex v entered by arc b the path leaves by the third outgoing arc
    after twin(b), clockwise when twin(b) is not outgoing or its dual edge
    points to the face on the right of b, counterclockwise otherwise. The
    arc gets color j when the path ends at v_j.

    The continuation of a path depends only on the arc it enters by, so each
    arc takes the color of its successor and every arc is walked once.

    Raises:
        NonterminatingPath: a path returns to one of its arcs or has no continuation
    """
    t = o.triangulation
    g = t.map
    index = _OutgoingIndex(o)

    def successor(b: int) -> int:
        back = g.twin[b]
        if not o.primal_out(back) or o.dual_toward_face(back):
            return index.third_out(back, clockwise=True)
        if o.dual_toward_face(b):
            return index.third_out(back, clockwise=False)
        raise NonterminatingPath(f"no straight continuation at vertex {g.target(b)}", witness=b)

    color: List[Optional[int]] = [None] * g.num_darts
    walked = [False] * g.num_darts
    for d in range(g.num_darts):
        if color[d] is not None or not t.is_inner_dart[d] or t.is_outer(g.origin[d]) or not o.primal_out(d):
            continue
        trail: List[int] = []
        b = d
        while color[b] is None:
            if walked[b]:
                raise NonterminatingPath(f"path from arc {d} returns to arc {b}", witness=[d, b])
            walked[b] = True
            trail.append(b)
            v = g.target(b)
            if t.is_outer(v):
                color[b] = t.outer_index[v]
                break
            b = successor(b)
        for a in trail:
            color[a] = color[b]
    return WoodColoring(t, color)


def orientation_wood(o: FiveCOrientation) -> WoodColoring:
    """Wood of a 5c-orientation through its labeling; agrees with ``psi``."""
    return theta(phi_inv(o))


def check_wood_symmetry(w: WoodColoring, perm: Sequence[int]) -> Report:
    """
    Check that an automorphism sending v_i to v_{i+1} shifts every color by one.
    """
    t = w.triangulation
    g = t.map
    report = Report(subject="wood symmetry")
    for d in range(g.num_darts):
        image = g.find_dart(perm[g.origin[d]], perm[g.target(d)])
        if image < 0:
            report.add("not_automorphism", f"arc {g.origin[d]}->{g.target(d)} has no image", witness=d)
            continue
        col = w.color[d]
        expected = None if col is None else (col + 1) % 5
        if w.color[image] != expected:
            report.add("color_shift", f"arc {d} has color {col}, its image {image} has {w.color[image]}", witness=[d, image])
    return report
