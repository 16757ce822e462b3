"""
Regions R_i(v) and their sizes.

R_i(v) is the closed region bounded by P_i-2(v), P_i+2(v) and the outer
edge v_i+2 v_i+3. ``region_sizes_linear`` counts its inner faces with tree
sweeps; ``region_sizes_naive`` flood-fills every region and serves as the
oracle. Outer vertices follow the conventions |R_i(v_i)| = 2n-7 and
|R_j(v_i)| = 0 for j != i.

Vertex counts give each boundary-path vertex half a vertex, see
``vertex_counts``. Weighted regions are summed along the same sweeps with
subtree sums over a dual spanning tree.
"""

import logging
from collections import deque
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set
from pydantic import BaseModel, Field

from src.core.errors import NonPositiveWeight
from src.core.report import Report
from src.regions.trees import WoodTrees, path
from src.utils.file_utils import FileUtils

logger = logging.getLogger("fivec")

MODES = ("faces", "vertices", "weighted")


class RegionTable:
    """
    Per-vertex region data.

    ``size[v][i]`` is |R_i(v)|, ``length[v][i]`` the length of P_i(v) and
    ``inside[v][i]`` the number of vertices strictly inside R_i(v). The sweep
    tables of the linear computation are kept per color in ``sweeps``.
    """

    def __init__(self, trees: WoodTrees):
        self.trees = trees
        n = trees.triangulation.n
        self.n = n
        self.size: List[List[int]] = [[0] * 5 for _ in range(n)]
        self.length: List[List[int]] = [[0] * 5 for _ in range(n)]
        self.inside: List[List[int]] = [[0] * 5 for _ in range(n)]
        self.sweeps: Dict[str, List[List[int]]] = {}

    @property
    def total_faces(self) -> int:
        return 2 * self.n - 7

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RegionTable):
            return NotImplemented
        return (self.size, self.length, self.inside) == (other.size, other.length, other.inside)


def _outer_conventions(rt: RegionTable) -> None:
    t = rt.trees.triangulation
    for i, v in enumerate(t.outer_vertices):
        rt.size[v] = [rt.total_faces if j == i else 0 for j in range(5)]
        rt.inside[v] = [rt.n - 5 if j == i else 0 for j in range(5)]


def region_sizes_linear(tr: WoodTrees) -> RegionTable:
    """
    Region sizes by leaf-to-root and root-to-leaf sweeps over the trees.

    N_i(v) counts the descendants of v in W_i; N_i^j(v) is N_i(w) + 1 for the
    child w of v in W_i reached by an arc v -> w of color j (j = i-2, i+2).
    N_i^left(v) sums N_i(u) - N_i^i-2(u) over the inner vertices u of
    P_i-2(v) other than v, and N_i^right likewise along P_i+2(v). Then

        n_i(v) = N_i(v) - N_i^i-2(v) - N_i^i+2(v) + N_i^left(v) + N_i^right(v)
        |R_i(v)| = 2 n_i(v) + length(P_i-2(v)) + length(P_i+2(v)) - 1
    """
    t = tr.triangulation
    w = tr.wood
    g = t.map
    n = t.n
    rt = RegionTable(tr)
    inner = tr.is_inner

    length = [[0] * n for _ in range(5)]
    for k in range(5):
        for v in tr.order[k]:
            p = tr.parent[k][v]
            length[k][v] = length[k][p] + 1 if inner(p) else 1

    descendants = [[0] * n for _ in range(5)]
    toward_minus = [[0] * n for _ in range(5)]
    toward_plus = [[0] * n for _ in range(5)]
    for i in range(5):
        below = descendants[i]
        for v in reversed(tr.order[i]):
            p = tr.parent[i][v]
            if inner(p):
                below[p] += below[v] + 1
        for v in tr.order[i]:
            p = tr.parent[i][v]
            if not inner(p):
                continue
            col = w.color[g.twin[tr.parent_dart[i][v]]]
            if col == (i - 2) % 5:
                toward_minus[i][p] = below[v] + 1
            elif col == (i + 2) % 5:
                toward_plus[i][p] = below[v] + 1

    left_table = [[0] * n for _ in range(5)]
    right_table = [[0] * n for _ in range(5)]
    for i in range(5):
        for k, skip, table in (
            ((i - 2) % 5, toward_minus[i], left_table[i]),
            ((i + 2) % 5, toward_plus[i], right_table[i]),
        ):
            for v in tr.order[k]:
                p = tr.parent[k][v]
                if inner(p):
                    table[v] = descendants[i][p] - skip[p] + table[p]

    for v in t.inner_vertices():
        for i in range(5):
            a, b = (i - 2) % 5, (i + 2) % 5
            strictly = (
                descendants[i][v] - toward_minus[i][v] - toward_plus[i][v]
                + left_table[i][v] + right_table[i][v]
            )
            rt.inside[v][i] = strictly
            rt.size[v][i] = 2 * strictly + length[a][v] + length[b][v] - 1
            rt.length[v][i] = length[i][v]
    _outer_conventions(rt)
    rt.sweeps = {
        "N": descendants,
        "N_minus": toward_minus,
        "N_plus": toward_plus,
        "N_left": left_table,
        "N_right": right_table,
    }
    logger.debug(f"Linear region sweep done for n={n}")
    return rt


def _boundary_edges(tr: WoodTrees, v: int, i: int) -> Set[int]:
    t = tr.triangulation
    g = t.map
    edges = {g.edge_of[t.outer_darts[(i + 2) % 5]]}
    for k in ((i - 2) % 5, (i + 2) % 5):
        p = path(tr, v, k)
        for a, b in zip(p, p[1:]):
            edges.add(g.edge_of[g.find_dart(a, b)])
    return edges


def region_faces(tr: WoodTrees, v: int, i: int) -> Set[int]:
    """Inner faces of R_i(v), by flooding from the face on the outer edge v_i+2 v_i+3."""
    t = tr.triangulation
    g = t.map
    if t.is_outer(v):
        return set(t.inner_faces) if t.outer_index[v] == i else set()
    blocked = _boundary_edges(tr, v, i)
    start = t.boundary_face((i + 2) % 5)
    outer = g.outer_face
    found = {start}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for d in g.face_darts(f):
            if g.edge_of[d] in blocked:
                continue
            h = g.face_of[g.twin[d]]
            if h != outer and h not in found:
                found.add(h)
                queue.append(h)
    return found


def region_vertices(tr: WoodTrees, v: int, i: int) -> Set[int]:
    """Vertices of the closed region R_i(v)."""
    t = tr.triangulation
    if t.is_outer(v):
        return set(range(t.n)) if t.outer_index[v] == i else {v}
    g = t.map
    result: Set[int] = set()
    for f in region_faces(tr, v, i):
        result.update(g.face_vertices(f))
    return result


def region_sizes_naive(tr: WoodTrees) -> RegionTable:
    """Region table from explicit flood fills; quadratic."""
    t = tr.triangulation
    rt = RegionTable(tr)
    for v in t.inner_vertices():
        for i in range(5):
            boundary = set(path(tr, v, (i - 2) % 5)) | set(path(tr, v, (i + 2) % 5))
            rt.size[v][i] = len(region_faces(tr, v, i))
            rt.inside[v][i] = len(region_vertices(tr, v, i) - boundary)
            rt.length[v][i] = len(path(tr, v, i)) - 1
    _outer_conventions(rt)
    return rt


def check_region_monotonicity(tr: WoodTrees) -> Report:
    """
    For inner u != v in R_i(v): R_i(u) lies in R_i(v), and R_i-2(v) with
    R_i+2(v) lies in R_i-2(u) with R_i+2(u).
    """
    t = tr.triangulation
    report = Report(subject="region monotonicity")
    faces = {(v, i): region_faces(tr, v, i) for v in t.inner_vertices() for i in range(5)}
    for (v, i), own in faces.items():
        side_v = faces[(v, (i - 2) % 5)] | faces[(v, (i + 2) % 5)]
        for u in region_vertices(tr, v, i):
            if u == v or t.is_outer(u):
                continue
            if not faces[(u, i)] <= own:
                report.add("region_not_nested", f"R{i + 1}({u}) is not inside R{i + 1}({v})", witness=[v, u, i])
            side_u = faces[(u, (i - 2) % 5)] | faces[(u, (i + 2) % 5)]
            if not side_v <= side_u:
                report.add("sides_not_nested", f"side regions of {v} are not inside those of {u} for color {i + 1}", witness=[v, u, i])
    return report


def _enclosed_weights(tr: WoodTrees, k: int, face_weight: Sequence[Fraction]) -> Dict[int, Fraction]:
    """
    Face weight enclosed by the cycle each edge closes with W_k, per edge id.

    W_k is extended to a spanning tree of G by the outer edges other than
    v_k v_k+1. The remaining edges form a spanning tree of the dual rooted
    at the outer face, and the faces enclosed by an edge's cycle are the
    dual subtree below that edge. Tree edges enclose nothing and are absent.
    """
    t = tr.triangulation
    g = t.map
    in_tree = [False] * g.num_edges
    for v in t.inner_vertices():
        in_tree[g.edge_of[tr.parent_dart[k][v]]] = True
    for j in range(5):
        if j != k:
            in_tree[g.edge_of[t.outer_darts[j]]] = True

    root = g.outer_face
    parent = [-1] * g.num_faces
    via = [-1] * g.num_faces
    order = [root]
    queue = deque([root])
    while queue:
        f = queue.popleft()
        for d in g.face_darts(f):
            e = g.edge_of[d]
            h = g.face_of[g.twin[d]]
            if in_tree[e] or h == root or via[h] >= 0:
                continue
            parent[h], via[h] = f, e
            order.append(h)
            queue.append(h)

    below = [Fraction(0)] * g.num_faces
    for f in reversed(order[1:]):
        below[f] += face_weight[f]
        below[parent[f]] += below[f]
    return {via[f]: below[f] for f in order[1:]}


def region_weights_linear(tr: WoodTrees, face_weight: Sequence[Fraction]) -> List[List[Fraction]]:
    """
    Total face weight of every region R_i(v).

    For u the end of the arc of color i+2 from v, R_i(v) is R_i(u) together
    with the faces enclosed by the edge vu and W_i-2; when u is v_i+2 those
    faces are all of R_i(v). Sweeping W_i+2 from the root gives every region
    of color i in one pass.

    Args:
        tr: trees of the wood
        face_weight: per face id of G; the outer face entry is ignored
    """
    t = tr.triangulation
    g = t.map
    weight = [Fraction(0) if f == g.outer_face else Fraction(face_weight[f]) for f in range(g.num_faces)]
    total = sum(weight, Fraction(0))
    region = [[Fraction(0)] * 5 for _ in range(t.n)]
    for i in range(5):
        enclosed = _enclosed_weights(tr, (i - 2) % 5, weight)
        k = (i + 2) % 5
        for v in tr.order[k]:
            u = tr.parent[k][v]
            own = enclosed.get(g.edge_of[tr.parent_dart[k][v]], Fraction(0))
            region[v][i] = own + region[u][i] if tr.is_inner(u) else own
    for i, v in enumerate(t.outer_vertices):
        region[v][i] = total
    return region


VERTEX_READINGS = ("split", "left", "right")

# Reading used by the vertices mode; see ``audit_vertex_reading``.
VERTEX_READING = "split"


def vertex_counts(rt: RegionTable, reading: str = VERTEX_READING) -> List[List[Fraction]]:
    """
    Vertices of each R_i(v) other than v, for an inner vertex v.

    Both bounding paths of R_i(v) also bound a neighbouring region, so each
    reading settles where their vertices count. ``left`` drops P_i-2(v),
    ``right`` drops P_i+2(v), and ``split`` counts both paths with weight 1/2,
    which gives (|R_i(v)| + 1) / 2. Every reading sums to n-1 per vertex.
    """
    if reading not in VERTEX_READINGS:
        raise ValueError(f"unknown vertex reading {reading!r}")
    counts: List[List[Fraction]] = [[Fraction(0)] * 5 for _ in range(rt.n)]
    for v in rt.trees.triangulation.inner_vertices():
        for i in range(5):
            left = rt.length[v][(i - 2) % 5]
            right = rt.length[v][(i + 2) % 5]
            if reading == "left":
                kept = Fraction(right)
            elif reading == "right":
                kept = Fraction(left)
            else:
                kept = Fraction(left + right, 2)
            counts[v][i] = rt.inside[v][i] + kept
    return counts


def audit_vertex_reading(tr: WoodTrees, reading: str = VERTEX_READING) -> Report:
    """
    Check the count inequalities the half-plane property rests on.

    For inner u != v with u in R_i(v), the count of R_i must not grow from v
    to u and the count of R_i-2 with R_i+2 must strictly grow. Quadratic.
    """
    t = tr.triangulation
    report = Report(subject=f"vertex reading {reading}")
    counts = vertex_counts(region_sizes_linear(tr), reading)
    for v in t.inner_vertices():
        for i in range(5):
            side = (i - 2) % 5, (i + 2) % 5
            for u in region_vertices(tr, v, i):
                if u == v or t.is_outer(u):
                    continue
                if counts[u][i] > counts[v][i]:
                    report.add("region_grows", f"R{i + 1}({u}) counts more than R{i + 1}({v})", witness=[v, u, i])
                if sum(counts[u][j] for j in side) <= sum(counts[v][j] for j in side):
                    report.add("sides_not_growing", f"side regions of {u} do not count more than those of {v} for color {i + 1}", witness=[v, u, i])
    return report


def weights(
    rt: RegionTable,
    mode: str = "faces",
    face_weights: Optional[Sequence[float]] = None,
    reading: str = VERTEX_READING,
) -> List[List[Fraction]]:
    """
    Barycentric weights alpha_i(v), summing to 1 exactly.

    Args:
        rt: region table
        mode: "faces" (|R_i(v)| / (2n-7)), "vertices" (``vertex_counts``
            over n-1) or "weighted" (total face weight of R_i(v) over the
            total weight)
        face_weights: per face id of G, required in weighted mode; must be
            positive on inner faces
        reading: vertex count reading of the vertices mode

    Raises:
        NonPositiveWeight: a weight is missing, zero or negative
    """
    t = rt.trees.triangulation
    n = t.n
    alpha: List[List[Fraction]] = [[Fraction(0)] * 5 for _ in range(n)]
    for i, v in enumerate(t.outer_vertices):
        alpha[v][i] = Fraction(1)

    if mode == "faces":
        total = rt.total_faces
        for v in t.inner_vertices():
            alpha[v] = [Fraction(rt.size[v][i], total) for i in range(5)]
    elif mode == "vertices":
        counts = vertex_counts(rt, reading)
        for v in t.inner_vertices():
            alpha[v] = [c / (n - 1) for c in counts[v]]
    elif mode == "weighted":
        if face_weights is None:
            raise NonPositiveWeight("weighted mode needs face weights")
        exact: List[Fraction] = [Fraction(0)] * t.map.num_faces
        for f in t.inner_faces:
            value = face_weights[f] if f < len(face_weights) else None
            if value is None or value <= 0:
                raise NonPositiveWeight(f"inner face {f} has weight {value}", witness=f)
            exact[f] = Fraction(value)
        total = sum(exact, Fraction(0))
        region = region_weights_linear(rt.trees, exact)
        for v in t.inner_vertices():
            alpha[v] = [region[v][i] / total for i in range(5)]
    else:
        raise ValueError(f"unknown weight mode {mode!r}")

    for v in range(n):
        if sum(alpha[v]) != 1:
            raise ValueError(f"weights of vertex {v} sum to {sum(alpha[v])}")
    return alpha


class RegionRow(BaseModel):
    vertex: int
    regions: List[int] = Field(..., min_length=5, max_length=5)
    path_lengths: List[int] = Field(..., min_length=5, max_length=5)


class RegionTableDocument(BaseModel):
    n: int
    total_faces: int
    rows: List[RegionRow]


def region_table_document(rt: RegionTable) -> RegionTableDocument:
    rows = [RegionRow(vertex=v, regions=rt.size[v], path_lengths=rt.length[v]) for v in range(rt.n)]
    return RegionTableDocument(n=rt.n, total_faces=rt.total_faces, rows=rows)


def dumps_region_table(rt: RegionTable) -> str:
    return FileUtils.dumps_json(region_table_document(rt).model_dump())
