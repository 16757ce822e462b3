"""
Tests for the trees of a wood, region sizes and barycentric weights.
"""

import json
from fractions import Fraction

import numpy as np
import pytest

from src.core.errors import InvalidWood, NonPositiveWeight
from src.construct.pipeline import construct_5c
from src.regions.sizes import (
    check_region_monotonicity,
    dumps_region_table,
    region_faces,
    region_sizes_linear,
    region_sizes_naive,
    audit_vertex_reading,
    region_vertices,
    region_weights_linear,
    vertex_counts,
    weights,
)
from src.regions.trees import (
    check_acyclic_biorientations,
    check_independent_paths,
    find_simple_cycle,
    path,
    paths,
    wood_trees,
)
from src.structures.orientation import minimize
from src.structures.wood import WoodColoring, psi


def trees_of(t, minimal=False):
    o = construct_5c(t)
    return wood_trees(psi(minimize(o) if minimal else o))


def test_wheel_paths_and_regions(w5):
    tr = trees_of(w5)
    for i in range(5):
        assert path(tr, 5, i) == [5, i]
    rt = region_sizes_linear(tr)
    assert rt.size[5] == [1, 1, 1, 1, 1]
    assert rt.length[5] == [1, 1, 1, 1, 1]
    assert rt.size[0] == [5, 0, 0, 0, 0]
    assert region_faces(tr, 5, 0) == {w5.boundary_face(2)}
    assert region_vertices(tr, 5, 0) == {2, 3, 5}


def test_icosa11_regions(icosa11):
    tr = trees_of(icosa11, minimal=True)
    rt = region_sizes_linear(tr)
    assert rt.size[10] == [3, 3, 3, 3, 3]
    base = rt.size[5]
    assert base in ([6, 4, 2, 1, 2], [4, 6, 2, 1, 2])
    for i in range(5):
        assert [rt.size[5 + i][(i + j) % 5] for j in range(5)] == base
        assert sum(rt.size[5 + i]) == 2 * icosa11.n - 7


def test_linear_matches_flood_fill(instances):
    for t in instances:
        tr = trees_of(t)
        linear, naive = region_sizes_linear(tr), region_sizes_naive(tr)
        assert linear == naive
        for v in t.inner_vertices():
            # the five regions tile the inner faces
            assert sum(linear.size[v]) == 2 * t.n - 7


def test_tree_certificates(instances):
    for t in instances:
        tr = trees_of(t)
        assert check_independent_paths(tr).ok
        assert check_acyclic_biorientations(tr.wood).ok
        for v in t.inner_vertices():
            ends = [p[-1] for p in paths(tr, v)]
            assert ends == t.outer_vertices


def test_region_monotonicity(icosa11, generated):
    for t in [icosa11] + list(generated[:3]):
        assert check_region_monotonicity(trees_of(t)).ok


def test_missing_color_is_rejected(w5):
    w = psi(construct_5c(w5))
    color = list(w.color)
    color[w5.map.find_dart(5, 2)] = None
    with pytest.raises(InvalidWood):
        wood_trees(WoodColoring(w5, color))


def test_find_simple_cycle():
    assert find_simple_cycle(4, []) is None
    # opposite arcs of one edge are not a cycle
    assert find_simple_cycle(3, [(0, 1), (1, 0), (1, 2), (2, 1)]) is None
    cycle = find_simple_cycle(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert sorted(cycle) == [0, 1, 2]
    cycle = find_simple_cycle(3, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)])
    assert sorted(cycle) == [0, 1, 2]


def test_weights_modes(icosa11, w5):
    rt = region_sizes_linear(trees_of(w5))
    alpha = weights(rt, "faces")
    assert alpha[5] == [Fraction(1, 5)] * 5
    assert alpha[2] == [0, 0, 1, 0, 0]

    rt = region_sizes_linear(trees_of(icosa11))
    faces_mode = weights(rt, "faces")
    uniform = [None] * icosa11.map.num_faces
    for f in icosa11.inner_faces:
        uniform[f] = 3
    assert weights(rt, "weighted", uniform) == faces_mode
    for row in weights(rt, "vertices"):
        assert sum(row) == 1
        assert all(x >= 0 for x in row)


def test_weight_errors(w5):
    rt = region_sizes_linear(trees_of(w5))
    with pytest.raises(NonPositiveWeight):
        weights(rt, "weighted")
    zero = [1] * w5.map.num_faces
    zero[w5.inner_faces[0]] = 0
    with pytest.raises(NonPositiveWeight):
        weights(rt, "weighted", zero)
    with pytest.raises(ValueError):
        weights(rt, "areas")


def test_region_table_document(w5):
    data = json.loads(dumps_region_table(region_sizes_linear(trees_of(w5))))
    assert data["n"] == 6
    assert data["total_faces"] == 5
    assert data["rows"][5] == {"vertex": 5, "regions": [1, 1, 1, 1, 1], "path_lengths": [1, 1, 1, 1, 1]}


def test_weighted_regions_match_flood_fill(instances):
    for k, t in enumerate(instances):
        tr = trees_of(t)
        ones = [1] * t.map.num_faces
        assert region_weights_linear(tr, ones) == region_sizes_linear(tr).size
        rng = np.random.default_rng(k)
        face_weight = [Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 4))) for _ in range(t.map.num_faces)]
        region = region_weights_linear(tr, face_weight)
        for v in t.inner_vertices():
            for i in range(5):
                assert region[v][i] == sum((face_weight[f] for f in region_faces(tr, v, i)), Fraction(0))


def test_split_vertex_counts(instances):
    for t in instances:
        rt = region_sizes_linear(trees_of(t))
        counts = vertex_counts(rt)
        for v in t.inner_vertices():
            assert counts[v] == [Fraction(rt.size[v][i] + 1, 2) for i in range(5)]
            for reading in ("left", "right"):
                assert sum(vertex_counts(rt, reading)[v]) == t.n - 1


def test_wheel_vertex_counts(w5):
    rt = region_sizes_linear(trees_of(w5))
    for reading in ("split", "left", "right"):
        assert vertex_counts(rt, reading)[5] == [1] * 5
    with pytest.raises(ValueError):
        vertex_counts(rt, "both")


def test_vertex_reading_audit(icosa11, generated):
    for minimal in (False, True):
        tr = trees_of(icosa11, minimal)
        assert audit_vertex_reading(tr).ok
        # a ring vertex and its neighbour across a two-colored edge tie on the side regions
        for reading in ("left", "right"):
            report = audit_vertex_reading(tr, reading)
            assert "sides_not_growing" in report.codes()
    for t in generated:
        report = audit_vertex_reading(trees_of(t))
        assert report.ok, report.summary()
