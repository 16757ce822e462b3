"""
Tests for pentagon triangulations, the 5c test, ingestion and the derived graphs.
"""

import pytest

from src.core.errors import ApexDegreeNot5, BadOuterFace, GenerationFailed, NonTriangularInnerFace
from src.planar_map.io import load_rotation_system
from src.planar_map.map import build_from_rotation_system
from src.triangulation5.derived import Role, completion, contract_completion, corner_graph
from src.triangulation5.five_c import is_5c, is_5c_bruteforce
from src.triangulation5.generator import ICOSA11_ROTATION, damage_5c, generate_random_5c
from src.triangulation5.ingest import from_five_connected
from src.triangulation5.triangulation import check_five_triangulation, triangulation_from_rotation_system

from tests.conftest import fixture_path


def test_wheel_shape(w5):
    assert w5.n == 6
    assert w5.num_inner_faces == 5
    assert w5.inner_vertices() == [5]
    assert [w5.map.origin[d] for d in w5.outer_darts] == [0, 1, 2, 3, 4]
    assert sorted(w5.face_corners_clockwise(w5.boundary_face(0))) == [0, 1, 5]


def test_clockwise_corners(w5):
    f = w5.boundary_face(0)
    corners = w5.face_corners_clockwise(f)
    start = corners.index(0)
    assert corners[start:] + corners[:start] == [0, 1, 5]


def test_bad_outer_face():
    m = build_from_rotation_system(ICOSA11_ROTATION, [0, 1, 2, 3, 4])
    with pytest.raises(BadOuterFace):
        check_five_triangulation(m, [0, 1, 2, 3, 3])
    with pytest.raises(BadOuterFace):
        check_five_triangulation(m, [0, 1, 2, 4, 3])


def test_non_triangular_inner_face():
    # pentagon with a single chord leaves a quadrilateral
    rot = [[1, 2, 4], [2, 0], [3, 0, 1], [4, 2], [0, 3]]
    with pytest.raises(NonTriangularInnerFace):
        triangulation_from_rotation_system(rot, [0, 1, 2, 3, 4])


def test_fixture_verdicts(w5, icosa11, non5c):
    assert is_5c(w5).ok
    assert is_5c(icosa11).ok
    verdict = is_5c(non5c)
    assert not verdict.ok
    assert sorted(verdict.cycle) == [0, 1, 5]
    assert verdict.enclosed == 6


def test_fast_test_agrees_with_flood_fill(generated):
    for k, t in enumerate(generated):
        assert is_5c_bruteforce(t).ok
        damaged = damage_5c(t, seed=k)
        assert damaged.n == t.n + 1
        fast, slow = is_5c(damaged), is_5c_bruteforce(damaged)
        assert not fast.ok and not slow.ok
        assert fast.enclosed is not None


def test_from_five_connected():
    icosahedron = load_rotation_system(fixture_path("icosahedron")).to_map()
    t = from_five_connected(icosahedron, 11)
    assert t.outer_vertices == [0, 1, 2, 3, 4]
    assert t.map.rotation_system() == ICOSA11_ROTATION

    octahedron = load_rotation_system(fixture_path("octahedron")).to_map()
    with pytest.raises(ApexDegreeNot5):
        from_five_connected(octahedron, 0)

    bipyramid = load_rotation_system(fixture_path("pentagonal_bipyramid")).to_map()
    wheel = from_five_connected(bipyramid, 6)
    assert wheel.n == 6 and is_5c(wheel).ok


def test_generator_is_deterministic():
    a = generate_random_5c(24, seed=42, flips=10)
    b = generate_random_5c(24, seed=42, flips=10)
    assert a.n == 24
    assert a.map.rotation_system() == b.map.rotation_system()
    assert is_5c(a).ok


def test_generator_sizes():
    assert generate_random_5c(6, seed=0).map.rotation_system() == [
        [1, 5, 4], [2, 5, 0], [3, 5, 1], [4, 5, 2], [0, 5, 3], [0, 1, 2, 3, 4],
    ]
    for n in (5, 7, 10):
        with pytest.raises(GenerationFailed):
            generate_random_5c(n, seed=0)


def test_completion_shape(icosa11):
    c = completion(icosa11)
    g = icosa11.map
    assert c.num_vertices == icosa11.n + g.num_edges + icosa11.num_inner_faces
    assert c.map.num_vertices - c.map.num_edges + c.map.num_faces == 2
    counts = {role: c.role.count(role) for role in Role}
    assert counts[Role.DUAL] == 15
    assert counts[Role.EDGE] == g.num_edges
    assert contract_completion(c) == g.rotation_system()


def test_corner_graph(icosa11):
    cg = corner_graph(icosa11)
    n_inner_edges = sum(icosa11.is_inner_dart) // 2
    # one bounded face per inner vertex, inner edge and inner face
    assert cg.num_inner_faces() == len(icosa11.inner_vertices()) + n_inner_edges + icosa11.num_inner_faces
    assert len(cg.element_cycles()) == cg.num_inner_faces()


def test_quadrilateral_damage_is_caught(generated):
    for k, t in enumerate(generated):
        damaged = damage_5c(t, seed=k, kind="quadrilateral")
        fast, slow = is_5c(damaged), is_5c_bruteforce(damaged)
        assert not fast.ok and not slow.ok
        assert len(fast.cycle) == 4
    with pytest.raises(ValueError):
        damage_5c(generated[0], seed=0, kind="pentagon")
