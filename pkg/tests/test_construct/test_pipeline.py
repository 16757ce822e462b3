"""
Tests for the construction of 5c-orientations.
"""

import pytest

from src.core.errors import Not5c
from src.construct.augmentation import angular_map, augment, regular_orientation
from src.construct.pipeline import construct_5c, orientation_b, pairing_oracle, spanning_tree
from src.structures.orientation import validate_orientation
from src.triangulation5.generator import damage_5c


def test_quad_augmentation(icosa11):
    q = augment(icosa11)
    h = q.h
    assert h.num_vertices == icosa11.n + 1
    walk = h.face_vertices(h.outer_face)
    k = walk.index(q.v0)
    assert walk[k:] + walk[:k] == [q.v0, 3, 4, 0]
    assert len(q.h_inner_faces) == 2 * icosa11.n - 4
    assert all(h.face_degree(f) == 3 for f in q.h_inner_faces)
    assert sorted(h.neighbors(q.v0)) == [0, 1, 2, 3]
    assert q.hdiamond.num_vertices == h.num_vertices + len(q.h_inner_faces)


def test_angular_map_degrees(w5):
    gd, face_vertex = angular_map(w5.map, w5.inner_faces)
    assert gd.num_vertices == 6 + 5
    assert gd.num_edges == 3 * 5
    for f in w5.inner_faces:
        assert gd.degree(face_vertex[f]) == 3
    assert gd.degree(5) == 5
    assert face_vertex[w5.map.outer_face] == -1


def test_regular_orientation(instances):
    for t in instances:
        q = augment(t)
        a = regular_orientation(q)
        n_h = q.h.num_vertices
        for f in q.h_inner_faces:
            assert a.outdegree(q.face_vertex[f]) == 1
        for v in range(n_h):
            if not q.is_h_outer(v):
                assert a.outdegree(v) == 4
        assert sum(a.outdegree(v) for v in q.h_outer) == 4


def test_orientation_b_and_tree(instances):
    for t in instances:
        q = augment(t)
        b = orientation_b(q, regular_orientation(q))
        assert t.is_outer(b.v_star)
        boundary = {b.face_vertex[t.boundary_face(i)] for i in range(5)}
        for f in t.inner_faces:
            fv = b.face_vertex[f]
            assert b.outdegree(fv) == (2 if fv in boundary else 1)
        for v in t.inner_vertices():
            assert b.outdegree(v) == 4

        tp = spanning_tree(b)
        gd = b.diamond
        assert len(tp.tree_edges) == gd.num_vertices - 1
        assert len(tp.pair_face) == gd.num_faces - 1
        assert pairing_oracle(tp).ok
        assert tp.root == b.v_star


def test_construct_is_valid(instances):
    for t in instances:
        assert validate_orientation(construct_5c(t)).ok


def test_construct_rejects_non5c(non5c):
    with pytest.raises(Not5c) as info:
        construct_5c(non5c)
    assert info.value.provenance
    assert info.value.witness["ok"] is False
    assert sorted(info.value.witness["cycle"]) == [0, 1, 5]


def test_construct_rejects_damaged_instances(generated):
    for k, t in enumerate(generated[:4]):
        with pytest.raises(Not5c):
            construct_5c(damage_5c(t, seed=100 + k))


def test_construct_rejects_separating_quadrilaterals(generated):
    for k, t in enumerate(generated[:4]):
        damaged = damage_5c(t, seed=200 + k, kind="quadrilateral")
        assert damaged.n == t.n + 1
        assert len(damaged.map.neighbors(t.n)) == 4
        with pytest.raises(Not5c) as info:
            construct_5c(damaged)
        assert info.value.provenance == "not_accessible"
        assert info.value.witness["ok"] is False
        assert len(info.value.witness["cycle"]) == 4
