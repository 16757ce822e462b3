"""
Tests for the barycentric drawing, its certificates and its resolution.
"""

import json
import time
from fractions import Fraction

import numpy as np
import pytest

from src.construct.pipeline import construct_5c
from src.core.errors import NoAutomorphismProvided
from src.drawing.barycentric import BaryPoint, draw_wood, place
from src.drawing.checks import (
    certify_planar,
    check_halfplane,
    check_rotational_symmetry,
    check_sectors,
    check_segments,
    segment_crossings,
)
from src.drawing.export import drawing_document, dumps_drawing
from src.drawing.frame import D5, D5_PRIME
from src.drawing.resolution import normalizer, resolution, squared_distance
from src.drawing.svg import PALETTE, SvgGraph, drawing_svg
from src.drawing.exact import Quad5
from src.regions.trees import wood_trees
from src.structures.orientation import minimize
from src.structures.wood import WoodColoring, orientation_wood, psi
from src.triangulation5.generator import generate_random_5c


def wood_of(t, minimal=False):
    o = construct_5c(t)
    return psi(minimize(o) if minimal else o)


def random_face_weights(t, seed):
    rng = np.random.default_rng(seed)
    values = [None] * t.map.num_faces
    for f in t.inner_faces:
        values[f] = int(rng.integers(1, 10))
    return values


def test_wheel_hub_at_center(w5):
    d = draw_wood(wood_of(w5))
    assert d.point(5).weights() == [Fraction(1, 5)] * 5
    assert d.coords[5] == pytest.approx([0.0, 0.0], abs=1e-12)
    for i in range(5):
        assert d.point(i) == BaryPoint.anchor(i)
        assert np.allclose(d.coords[i], d.frame.anchor(i))


def test_place_rejects_bad_weights(w5):
    alpha = [[Fraction(1 if k == i else 0) for k in range(5)] for i in range(5)]
    alpha.append([Fraction(1, 2)] * 5)
    with pytest.raises(ValueError):
        place(w5, alpha)


@pytest.mark.parametrize("mode", ["faces", "vertices", "weighted"])
def test_planar_in_every_mode(instances, mode):
    for k, t in enumerate(instances):
        face_weights = random_face_weights(t, k) if mode == "weighted" else None
        d = draw_wood(wood_of(t), mode, face_weights)
        report = certify_planar(d)
        assert report.ok, report.summary()


def test_moved_vertex_breaks_planarity(w5):
    d = draw_wood(wood_of(w5))
    # the hub on the outer edge v3 v4 flattens exactly the face on that edge
    bad = d.moved(5, BaryPoint.from_weights([0, 0, Fraction(1, 2), Fraction(1, 2), 0]))
    report = certify_planar(bad)
    assert report.codes() == ["face_not_proper"]
    assert report.violations[0].witness == w5.boundary_face(2)
    assert segment_crossings(bad)
    assert not check_segments(bad).ok


def test_no_crossings(instances):
    for t in instances:
        d = draw_wood(wood_of(t))
        assert segment_crossings(d) == []
        assert check_segments(d).ok


def test_halfplane_and_sectors(instances):
    for t in instances:
        for minimal in (False, True):
            w = wood_of(t, minimal)
            for mode in ("faces", "vertices"):
                d = draw_wood(w, mode)
                assert check_halfplane(d, wood_trees(w)).ok
                report = check_sectors(d, w)
                assert report.ok, report.summary()


def test_sector_violation_reported(w5):
    w = wood_of(w5)
    d = draw_wood(w)
    color = list(w.color)
    spoke = next(dart for dart in w5.map.vertex_darts(5) if w5.map.target(dart) == 0)
    # the spoke towards V1 recolored with color 3
    color[spoke] = 2
    report = check_sectors(d, WoodColoring(w5, color))
    assert "sector" in report.codes()
    assert any(v.witness == [5, 0, 2] for v in report.violations)


def test_rotational_symmetry(w5, icosa11):
    for t in (w5, icosa11):
        d = draw_wood(wood_of(t, minimal=True))
        report = check_rotational_symmetry(d)
        assert report.ok, report.summary()


def test_symmetry_needs_automorphism(generated):
    d = draw_wood(wood_of(generated[0]))
    with pytest.raises(NoAutomorphismProvided):
        check_rotational_symmetry(d)


def test_symmetry_violation(w5):
    d = draw_wood(wood_of(w5))
    # identity is no rotation of the pentagon
    report = check_rotational_symmetry(d, list(range(6)))
    assert not report.ok
    assert report.codes()[0] == "not_symmetric"


def test_wheel_resolution(w5):
    d = draw_wood(wood_of(w5))
    assert squared_distance(d, 5, 0) == Quad5.of(1)
    metrics = resolution(d)
    assert metrics.min_distance == pytest.approx(1.0)
    assert normalizer(d) == 5
    assert metrics.normalized_min == pytest.approx(5.0)
    assert metrics.bound == pytest.approx(D5)
    assert metrics.meets_bound is False


def test_icosa11_attains_constants(icosa11):
    w = wood_of(icosa11, minimal=True)
    faces = resolution(draw_wood(w, "faces"))
    assert faces.normalized_min == pytest.approx(D5, abs=1e-7)
    assert faces.meets_bound
    vertices = resolution(draw_wood(w, "vertices"))
    assert normalizer(draw_wood(w, "vertices")) == 20
    assert vertices.normalized_min == pytest.approx(D5, abs=1e-7)
    assert vertices.meets_bound
    assert vertices.bound == pytest.approx(D5_PRIME)


def test_resolution_bound_on_generated(generated):
    for t in generated:
        metrics = resolution(draw_wood(wood_of(t), "faces"))
        assert metrics.meets_bound, f"n={t.n}: {metrics.normalized_min}"


def test_weighted_has_no_normalizer(w5):
    d = draw_wood(wood_of(w5), "weighted", random_face_weights(w5, 0))
    metrics = resolution(d)
    assert normalizer(d) is None
    assert metrics.normalized_min is None
    assert metrics.meets_bound is None


def test_svg_output(w5):
    w = wood_of(w5)
    d = draw_wood(w)
    text = drawing_svg(d, scale=100)
    assert text == drawing_svg(d, scale=100)
    assert text.startswith("<?xml")
    assert text.count("<line") == w5.map.num_edges
    assert text.count("<circle") == 6
    assert text.count("fill:white") == 5
    overlay = drawing_svg(d, scale=100, wood=w)
    colored = sum(1 for col in w.color if col is not None)
    assert overlay.count("<line") == w5.map.num_edges + colored
    for col in range(5):
        assert PALETTE[col] in overlay


def test_svg_window_flips_y():
    svg = SvgGraph(scale=100, margin=0.1)
    assert svg.size == 220
    assert svg.window_coords(0.0, 1.0) == pytest.approx((110.0, 10.0))
    assert svg.window_coords(-1.0, -1.0) == pytest.approx((10.0, 210.0))
    assert 'width="220"' in svg.header()


def test_drawing_export(w5):
    d = draw_wood(wood_of(w5))
    doc = drawing_document(d)
    assert doc.n == 6
    assert doc.vertices[5].weights == ["1/5"] * 5
    assert doc.vertices[0].weights == ["1/1", "0/1", "0/1", "0/1", "0/1"]
    data = json.loads(dumps_drawing(d, resolution(d)))
    assert data["kind"] == "drawing"
    assert data["mode"] == "faces"
    assert data["metrics"]["closest_pair"][1] == 5
    assert "metrics" not in json.loads(dumps_drawing(d))


def test_vertices_mode_shrinks_faces_mode(instances):
    # with shared path vertices the vertex weights are (|R_i| + 1) / (2n - 2)
    for t in instances:
        w = wood_of(t)
        faces, vertices = draw_wood(w, "faces"), draw_wood(w, "vertices")
        ratio = (2 * t.n - 7) / (2 * t.n - 2)
        inner = t.inner_vertices()
        assert np.allclose(vertices.coords[inner], ratio * faces.coords[inner], atol=1e-12)
        assert resolution(vertices).meets_bound


@pytest.mark.parametrize("mode", ["faces", "vertices", "weighted"])
def test_wide_batch_certificates(wide_batch, mode):
    for k, t in enumerate(wide_batch):
        w = wood_of(t, minimal=k % 2 == 1)
        face_weights = random_face_weights(t, k) if mode == "weighted" else None
        d = draw_wood(w, mode, face_weights)
        report = certify_planar(d)
        assert report.ok, f"n={t.n}: {report.summary()}"
        report = check_sectors(d, w)
        assert report.ok, f"n={t.n}: {report.summary()}"
        if k % 3 == 0:
            report = check_halfplane(d, wood_trees(w))
            assert report.ok, f"n={t.n}: {report.summary()}"
        if mode != "weighted":
            assert resolution(d).meets_bound, f"n={t.n} mode={mode}"


@pytest.mark.slow
def test_large_instance_within_budget():
    t = generate_random_5c(5000, 5000)
    start = time.perf_counter()
    o = construct_5c(t)
    w = orientation_wood(o)
    d = draw_wood(w, "faces")
    elapsed = time.perf_counter() - start
    assert d.n == 5000
    assert elapsed < 10.0, f"construct and draw took {elapsed:.2f}s at n=5000"
    start = time.perf_counter()
    assert psi(o).color == w.color
    assert time.perf_counter() - start < 10.0
