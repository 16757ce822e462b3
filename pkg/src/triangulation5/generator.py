"""
Random 5c-triangulations for tests and benchmarks.

No 5c-triangulation has 7 to 10 vertices, and splitting a face with a new
degree-3 vertex always creates a separating triangle, so growth uses moves
that can keep the 5c property:

- outer push: a new outer vertex is stacked over the outer corner of an
  outer vertex of degree at least 4, which becomes inner;
- expansion: an inner vertex of degree at least 6 is split into two
  adjacent vertices of degree at least 5;
- flip: an inner edge is replaced by the other diagonal of its two faces.

Every move is checked on the 3- and 4-cycles through its new edges and
undone when it creates a short separating cycle. This is a test-instance
source, not a uniform sampler.
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.core.config import get_settings
from src.core.errors import GenerationFailed
from src.triangulation5.five_c import is_5c
from src.triangulation5.triangulation import FiveTriangulation, triangulation_from_rotation_system

logger = logging.getLogger("fivec")

W5_ROTATION = [[1, 5, 4], [2, 5, 0], [3, 5, 1], [4, 5, 2], [0, 5, 3], [0, 1, 2, 3, 4]]

ICOSA11_ROTATION = (
    [[(i + 1) % 5, 5 + i, 5 + (i - 1) % 5, (i - 1) % 5] for i in range(5)]
    + [[5 + (i - 1) % 5, i, (i + 1) % 5, 5 + (i + 1) % 5, 10] for i in range(5)]
    + [[5, 6, 7, 8, 9]]
)

OUTER = [0, 1, 2, 3, 4]


class _Growth:
    """Mutable rotation system of a 5c-triangulation with undoable moves."""

    def __init__(self, rot: List[List[int]], outer: List[int], rng: np.random.Generator):
        self.rot = [list(r) for r in rot]
        self.outer = list(outer)
        self.rng = rng
        self._undo: Optional[Tuple[Dict[int, List[int]], List[int], int]] = None

    @property
    def n(self) -> int:
        return len(self.rot)

    # rotation helpers

    def cw_next(self, a: int, b: int) -> int:
        lst = self.rot[a]
        return lst[(lst.index(b) + 1) % len(lst)]

    def _outer_neighbours(self, a: int) -> Optional[Tuple[int, int]]:
        if a not in self.outer:
            return None
        i = self.outer.index(a)
        return self.outer[i - 1], self.outer[(i + 1) % 5]

    def _inner_sector(self, a: int, b: int, c: int) -> bool:
        """The corner of a after b (clockwise) ends at c and is not the outer corner."""
        if self.cw_next(a, b) != c:
            return False
        ends = self._outer_neighbours(a)
        return ends is None or ends != (b, c)

    def is_face(self, a: int, b: int, c: int) -> bool:
        return self._inner_sector(a, b, c) or self._inner_sector(a, c, b)

    def locally_5c(self, vertices) -> bool:
        """No 3- or 4-cycle through the given vertices encloses a vertex."""
        for s in vertices:
            ns = set(self.rot[s])
            for b in ns:
                for c in ns.intersection(self.rot[b]):
                    if not self.is_face(s, b, c):
                        return False
            for x in ns:
                nx = set(self.rot[x])
                for z in ns:
                    if z == x:
                        continue
                    for y in nx.intersection(self.rot[z]):
                        if y == s:
                            continue
                        if y in ns and self.is_face(s, x, y) and self.is_face(s, y, z):
                            continue
                        if z in nx and self.is_face(x, y, z) and self.is_face(x, z, s):
                            continue
                        return False
        return True

    # undo journal

    def _begin(self, touched) -> None:
        self._undo = ({v: list(self.rot[v]) for v in touched}, list(self.outer), len(self.rot))

    def _rollback(self) -> None:
        saved, outer, size = self._undo
        del self.rot[size:]
        for v, lst in saved.items():
            self.rot[v] = lst
        self.outer = outer
        self._undo = None

    def _commit(self, checked) -> bool:
        if self.locally_5c(checked):
            self._undo = None
            return True
        self._rollback()
        return False

    # moves

    def push(self) -> bool:
        i = int(self.rng.integers(5))
        o = self.outer[i]
        if len(self.rot[o]) < 4:
            return False
        prev, nxt = self.outer[i - 1], self.outer[(i + 1) % 5]
        self._begin([o, prev, nxt])
        w = len(self.rot)
        self.rot.append([nxt, o, prev])
        lst = self.rot[o]
        lst.insert(lst.index(prev) + 1, w)
        lst = self.rot[prev]
        lst.insert(lst.index(o), w)
        lst = self.rot[nxt]
        lst.insert(lst.index(o) + 1, w)
        self.outer[i] = w
        return self._commit([w])

    def expand(self) -> bool:
        inner = [v for v in range(self.n) if v not in self.outer and len(self.rot[v]) >= 6]
        if not inner:
            return False
        v = inner[int(self.rng.integers(len(inner)))]
        d = len(self.rot[v])
        s = int(self.rng.integers(d))
        p = self.rot[v][s:] + self.rot[v][:s]
        k = int(self.rng.integers(3, d - 2))
        w = len(self.rot)
        self._begin([v] + p)
        self.rot.append([v] + p[k:] + [p[0]])
        self.rot[v] = p[:k + 1] + [w]
        lst = self.rot[p[k]]
        lst.insert(lst.index(v), w)
        lst = self.rot[p[0]]
        lst.insert(lst.index(v) + 1, w)
        for j in range(k + 1, d):
            lst = self.rot[p[j]]
            lst[lst.index(v)] = w
        return self._commit([v, w])

    def flip(self) -> bool:
        a = int(self.rng.integers(self.n))
        b = self.rot[a][int(self.rng.integers(len(self.rot[a])))]
        if a in self.outer and b in self.outer:
            i, j = self.outer.index(a), self.outer.index(b)
            if (i - j) % 5 in (1, 4):
                return False
        c1, d1 = self.cw_next(a, b), self.cw_next(b, a)
        if c1 == d1 or d1 in self.rot[c1]:
            return False
        self._begin([a, b, c1, d1])
        self.rot[a].remove(b)
        self.rot[b].remove(a)
        lst = self.rot[c1]
        lst.insert(lst.index(a) + 1, d1)
        lst = self.rot[d1]
        lst.insert(lst.index(b) + 1, c1)
        return self._commit([c1, d1])


def generate_random_5c(n_target: int, seed: int, flips: int = 0) -> FiveTriangulation:
    """
    Generate a 5c-triangulation with exactly n_target vertices.

    Args:
        n_target: vertex count, at least 6
        seed: seed of the numpy random generator; equal seeds give equal output
        flips: number of random flip attempts after growth

    Raises:
        GenerationFailed: no 5c-triangulation has this size, or the move
            budget is exhausted
    """
    if n_target < 6:
        raise GenerationFailed(f"a 5c-triangulation has at least 6 vertices, got {n_target}")
    if 7 <= n_target <= 10:
        raise GenerationFailed(f"no 5c-triangulation has {n_target} vertices")

    rng = np.random.default_rng(seed)
    start = W5_ROTATION if n_target == 6 else ICOSA11_ROTATION
    growth = _Growth(start, OUTER, rng)
    budget = get_settings().FIVEC_GENERATOR_BUDGET_FACTOR * (n_target + flips) + 100
    attempts = 0
    while growth.n < n_target:
        attempts += 1
        if attempts > budget:
            raise GenerationFailed(
                f"move budget {budget} exhausted at {growth.n} of {n_target} vertices (seed {seed})"
            )
        if rng.random() < 0.5:
            grown = growth.push()
        else:
            grown = growth.expand() or growth.push()
        if grown and rng.random() < 0.5:
            growth.flip()

    accepted = sum(1 for _ in range(flips) if growth.flip())
    t = triangulation_from_rotation_system(growth.rot, growth.outer)
    verdict = is_5c(t)
    if not verdict.ok:
        raise GenerationFailed(f"generated instance fails the 5c test: {verdict.reason} {verdict.cycle}")
    logger.debug(f"Generated n={n_target} seed={seed} after {attempts} growth attempts, {accepted}/{flips} flips")
    return t


def damage_5c(t: FiveTriangulation, seed: int, kind: str = "triangle") -> FiveTriangulation:
    """
    A 5-triangulation that is not 5c, one vertex larger than t.

    ``triangle`` splits a random inner face with a new degree-3 vertex, so the
    face boundary becomes a separating triangle. ``quadrilateral`` replaces a
    random inner edge ab by a degree-4 vertex joined to a, b and the apexes
    c, d of the two faces at ab, so a c b d becomes a separating quadrilateral.
    """
    rng = np.random.default_rng(seed)
    g = t.map
    rot = g.rotation_system()
    z = len(rot)
    if kind == "triangle":
        f = t.inner_faces[int(rng.integers(len(t.inner_faces)))]
        a, b, c = t.face_corners_clockwise(f)
        rot.append([a, b, c])
        rot[a].insert(rot[a].index(b) + 1, z)
        rot[b].insert(rot[b].index(c) + 1, z)
        rot[c].insert(rot[c].index(a) + 1, z)
    elif kind == "quadrilateral":
        inner_edges = [e for e in range(g.num_edges) if t.is_inner_dart[g.edge_dart(e)]]
        e = inner_edges[int(rng.integers(len(inner_edges)))]
        a, b = g.origin[g.edge_dart(e)], g.target(g.edge_dart(e))
        k = rot[a].index(b)
        # clockwise around a: d, b, c
        c, d = rot[a][(k + 1) % len(rot[a])], rot[a][k - 1]
        rot[a][k] = z
        rot[b][rot[b].index(a)] = z
        rot[c].insert(rot[c].index(a) + 1, z)
        rot[d].insert(rot[d].index(b) + 1, z)
        rot.append([a, d, b, c])
    else:
        raise ValueError(f"unknown damage {kind!r}")
    return triangulation_from_rotation_system(rot, t.outer_vertices)
