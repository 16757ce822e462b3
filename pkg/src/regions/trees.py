"""
The trees W_1..W_5 of a 5c-wood, their paths, and acyclicity certificates.
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from src.core.errors import CycleDetected, InvalidWood
from src.core.report import Report
from src.structures.wood import WoodColoring

logger = logging.getLogger("fivec")


class WoodTrees:
    """Parent pointers of each W_i; ``order[i]`` lists inner vertices root to leaves."""

    def __init__(self, w: WoodColoring):
        self.wood = w
        t = w.triangulation
        g = t.map
        n = t.n
        self.triangulation = t
        self.parent: List[List[int]] = [[-1] * n for _ in range(5)]
        self.parent_dart: List[List[int]] = [[-1] * n for _ in range(5)]
        for v in t.inner_vertices():
            for d in g.vertex_darts(v):
                col = w.color[d]
                if col is not None:
                    self.parent[col][v] = g.target(d)
                    self.parent_dart[col][v] = d
        for i in range(5):
            missing = [v for v in t.inner_vertices() if self.parent[i][v] < 0]
            if missing:
                raise InvalidWood(f"vertices {missing[:5]} have no outgoing arc of color {i + 1}", witness=missing)

        self.children: List[List[List[int]]] = [[[] for _ in range(n)] for _ in range(5)]
        self.order: List[List[int]] = []
        for i in range(5):
            self._check_acyclic(i)
            for v in t.inner_vertices():
                self.children[i][self.parent[i][v]].append(v)
            root = t.outer_vertices[i]
            order = []
            queue = deque(self.children[i][root])
            while queue:
                v = queue.popleft()
                order.append(v)
                queue.extend(self.children[i][v])
            if len(order) != len(t.inner_vertices()):
                stray = sorted(set(t.inner_vertices()) - set(order))
                raise InvalidWood(f"W{i + 1} does not end at v{i + 1} from {stray[:5]}", witness=stray)
            self.order.append(order)

    def _check_acyclic(self, i: int) -> None:
        t = self.triangulation
        parent = self.parent[i]
        state = [0] * t.n  # 0 new, 1 on the current walk, 2 done
        for start in t.inner_vertices():
            walk = []
            v = start
            while v >= 0 and not t.is_outer(v) and state[v] == 0:
                state[v] = 1
                walk.append(v)
                v = parent[v]
            if v >= 0 and not t.is_outer(v) and state[v] == 1:
                cycle = walk[walk.index(v):]
                raise CycleDetected(f"W{i + 1} has a directed cycle {cycle}", color=i, cycle=cycle)
            for x in walk:
                state[x] = 2

    def is_inner(self, v: int) -> bool:
        return not self.triangulation.is_outer(v)


def wood_trees(w: WoodColoring) -> WoodTrees:
    """
    Raises:
        CycleDetected: some W_i has a directed cycle
        InvalidWood: an inner vertex lacks a color or W_i reaches the wrong root
    """
    return WoodTrees(w)


def path(tr: WoodTrees, v: int, i: int) -> List[int]:
    """Vertices of P_i(v), from v to v_i."""
    result = [v]
    while tr.is_inner(result[-1]):
        result.append(tr.parent[i][result[-1]])
    return result


def paths(tr: WoodTrees, v: int) -> List[List[int]]:
    """P_1(v)..P_5(v)."""
    return [path(tr, v, i) for i in range(5)]


def check_independent_paths(tr: WoodTrees) -> Report:
    """Every inner vertex's five tree paths meet only at the vertex itself."""
    report = Report(subject="independent paths")
    for v in tr.triangulation.inner_vertices():
        seen: Dict[int, int] = {}
        for i, p in enumerate(paths(tr, v)):
            for u in p[1:]:
                if u in seen:
                    report.add(
                        "paths_meet",
                        f"P{seen[u] + 1}({v}) and P{i + 1}({v}) share vertex {u}",
                        witness=[v, u],
                    )
                seen[u] = i
    return report


def _arcs_of(w: WoodColoring, forward: Set[int], backward: Set[int]) -> List[Tuple[int, int]]:
    g = w.triangulation.map
    arcs = set()
    for d, col in enumerate(w.color):
        if col is None:
            continue
        if col in forward:
            arcs.add((g.origin[d], g.target(d)))
        if col in backward:
            arcs.add((g.target(d), g.origin[d]))
    return sorted(arcs)


def _cycle_in_component(arcs: Sequence[Tuple[int, int]], members: Set[int]) -> Optional[List[int]]:
    inside = [(a, b) for a, b in arcs if a in members and b in members]
    arc_set = set(inside)
    successors: Dict[int, List[int]] = {}
    for a, b in inside:
        successors.setdefault(a, []).append(b)

    for a, b in inside:
        if (b, a) in arc_set:
            continue
        # shortest path b -> a closes a cycle of length >= 3
        prev = {b: None}
        queue = deque([b])
        while queue:
            x = queue.popleft()
            if x == a:
                break
            for y in successors.get(x, []):
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        walk = [a]
        while prev[walk[-1]] is not None:
            walk.append(prev[walk[-1]])
        return list(reversed(walk))

    # all arcs two-way: a cycle of the underlying graph is a directed cycle
    undirected: Dict[int, Set[int]] = {}
    for a, b in inside:
        undirected.setdefault(a, set()).add(b)
    if len(inside) // 2 < len(members):
        return None
    start = min(members)
    parent = {start: None}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in sorted(undirected.get(x, ())):
            if y == parent[x]:
                continue
            if y in parent:
                ancestors = []
                z = x
                while z is not None:
                    ancestors.append(z)
                    z = parent[z]
                right = [y]
                while right[-1] not in ancestors:
                    right.append(parent[right[-1]])
                left = ancestors[:ancestors.index(right[-1]) + 1]
                return left + list(reversed(right[:-1]))
            parent[y] = x
            stack.append(y)
    return None


def find_simple_cycle(n: int, arcs: Sequence[Tuple[int, int]]) -> Optional[List[int]]:
    """
    A simple directed cycle of length at least 3 in a biorientation, or None.

    Opposite arcs of one edge do not form a cycle. Strongly connected
    components are computed with scipy; a component holds such a cycle iff
    one of its arcs is one-way or its underlying graph is not a tree.
    """
    if not arcs:
        return None
    rows = np.array([a for a, _ in arcs])
    cols = np.array([b for _, b in arcs])
    graph = csr_matrix((np.ones(len(arcs), dtype=np.int8), (rows, cols)), shape=(n, n))
    count, labels = connected_components(graph, directed=True, connection="strong")
    members: Dict[int, Set[int]] = {}
    for v, label in enumerate(labels):
        members.setdefault(int(label), set()).add(v)
    for group in members.values():
        if len(group) < 2:
            continue
        cycle = _cycle_in_component(arcs, group)
        if cycle is not None:
            return cycle
    return None


def check_acyclic_biorientations(w: WoodColoring) -> Report:
    """
    Certify that W_i, W_i-1, W_i+1 with W_i-2 and W_i+2 reversed has no simple
    directed cycle for every i, and that every W_j with W_k reversed is acyclic.
    """
    n = w.triangulation.n
    report = Report(subject="acyclic biorientations")
    for i in range(5):
        arcs = _arcs_of(w, {i, (i - 1) % 5, (i + 1) % 5}, {(i - 2) % 5, (i + 2) % 5})
        cycle = find_simple_cycle(n, arcs)
        if cycle is not None:
            report.add(f"O{i + 1}", f"biorientation {i + 1} has directed cycle {cycle}", witness=cycle)
    for j in range(5):
        for k in range(5):
            cycle = find_simple_cycle(n, _arcs_of(w, {j}, {k}))
            if cycle is not None:
                report.add(f"W{j + 1}_W{k + 1}rev", f"W{j + 1} with W{k + 1} reversed has cycle {cycle}", witness=cycle)
    return report
