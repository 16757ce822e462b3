"""
Tests for planar maps built from rotation systems.
"""

import json
import pytest

from src.core.errors import Disconnected, InconsistentRotation, NonPlanar, OuterFaceNotFound, ParseError
from src.planar_map.io import dumps_rotation_system, load_rotation_system, parse_rotation_system, rotation_system_of
from src.planar_map.map import PlanarMap, assemble_rotation_system, build_from_rotation_system, faces, validate
from src.triangulation5.generator import W5_ROTATION

from tests.conftest import fixture_path

OUTER = [0, 1, 2, 3, 4]


def test_wheel_counts():
    m = build_from_rotation_system(W5_ROTATION, OUTER)
    assert (m.num_vertices, m.num_edges, m.num_faces) == (6, 10, 6)
    assert m.face_vertices(m.outer_face) == OUTER
    assert validate(m).ok
    orbits = faces(m)
    assert sum(1 for f in orbits if f.is_outer) == 1
    assert all(len(f.darts) == 3 for f in orbits if not f.is_outer)


def test_dart_tables_are_consistent():
    m = build_from_rotation_system(W5_ROTATION, OUTER)
    for d in range(m.num_darts):
        assert m.twin[m.twin[d]] == d
        assert m.sigma_inv[m.sigma[d]] == d
        assert m.origin[m.sigma[d]] == m.origin[d]
    assert m.neighbors(5) == [0, 1, 2, 3, 4]
    assert m.target(m.find_dart(5, 3)) == 3
    assert m.find_dart(0, 2) == -1


def test_rotation_system_round_trip():
    m = build_from_rotation_system(W5_ROTATION, OUTER)
    assert m.rotation_system() == W5_ROTATION


def test_inner_faces_are_counterclockwise_walks():
    m = build_from_rotation_system(W5_ROTATION, OUTER)
    f = m.face_of[m.twin[m.find_dart(0, 1)]]
    walk = m.face_vertices(f)
    start = walk.index(0)
    assert walk[start:] + walk[:start] == [0, 5, 1]


def test_inconsistent_rotation():
    with pytest.raises(InconsistentRotation):
        assemble_rotation_system([[1], []])
    with pytest.raises(InconsistentRotation):
        assemble_rotation_system([[1, 2], [0]])


def test_disconnected():
    with pytest.raises(Disconnected):
        build_from_rotation_system([[1], [0], [3], [2]], [0, 1])


def test_toroidal_rotation_is_rejected():
    # K4 with every rotation in increasing order has two faces
    rot = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]]
    with pytest.raises(NonPlanar):
        build_from_rotation_system(rot, [0, 1, 2])
    assert "euler" in validate(assemble_rotation_system(rot)).codes()


def test_missing_outer_face():
    with pytest.raises(OuterFaceNotFound):
        build_from_rotation_system(W5_ROTATION, [0, 1, 2, 3])
    with pytest.raises(OuterFaceNotFound):
        build_from_rotation_system(W5_ROTATION, [4, 3, 2, 1, 0])


def test_validate_reports_broken_tables():
    broken = PlanarMap(twin=[0, 1], sigma=[0, 1], origin=[0, 1])
    assert "twin_fixed_point" in validate(broken).codes()
    uneven = PlanarMap(twin=[1, 0], sigma=[0, 1], origin=[0], num_vertices=2)
    assert validate(uneven).codes() == ["table_sizes"]


def test_rotation_system_document_round_trip():
    document = load_rotation_system(fixture_path("icosa11"))
    assert document.symmetry == [1, 2, 3, 4, 0, 6, 7, 8, 9, 5, 10]
    again = parse_rotation_system(json.loads(dumps_rotation_system(document)))
    assert again == document
    m = document.to_map()
    assert rotation_system_of(m, document.outer, document.symmetry) == document


def test_rotation_system_document_errors():
    with pytest.raises(ParseError):
        parse_rotation_system({"vertices": 2, "rot": [[1]], "outer": [0]})
    with pytest.raises(ParseError):
        parse_rotation_system({"vertices": 2, "rot": [[1], [0]], "outer": [0, 5]})
    with pytest.raises(ParseError):
        parse_rotation_system({"vertices": 2, "rot": [[1], [0]], "outer": [0, 1], "symmetry": [0, 0]})
