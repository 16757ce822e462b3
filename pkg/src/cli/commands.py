"""
Command implementations. Each command returns a process exit code:

- 0: success
- 1: invalid input (not a 5-triangulation, not 5c, invalid structure)
- 2: I/O, parse or flag error
- 3: a drawing check failed
"""

import csv
import io
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from src.cli.config import RunConfig
from src.core.config import get_settings
from src.core.errors import (
    CheckFailed,
    ConfigError,
    ConstructionError,
    FiveCError,
    MapError,
    Not5c,
    ParseError,
    TriangulationError,
)
from src.core.report import Report
from src.drawing.barycentric import Drawing, draw_wood
from src.drawing.checks import (
    certify_planar,
    check_halfplane,
    check_rotational_symmetry,
    check_sectors,
    check_segments,
)
from src.drawing.export import dumps_drawing
from src.drawing.resolution import ResolutionMetrics, resolution
from src.drawing.svg import write_svg
from src.planar_map.io import load_rotation_system, rotation_system_of, save_rotation_system
from src.regions.trees import wood_trees
from src.structures.labeling import phi_inv, validate_labeling
from src.structures.orientation import FiveCOrientation, minimize, validate_orientation
from src.structures.serialization import (
    dumps_structure,
    labeling_document,
    labeling_from_document,
    orientation_document,
    orientation_from_document,
    parse_structure,
    wood_document,
    wood_from_document,
)
from src.structures.wood import WoodColoring, orientation_wood, validate_wood
from src.construct.pipeline import construct_5c
from src.triangulation5.derived import completion
from src.triangulation5.five_c import is_5c
from src.triangulation5.generator import generate_random_5c
from src.triangulation5.triangulation import FiveTriangulation, check_five_triangulation
from src.utils.file_utils import FileUtils
from src.utils.validation import ValidationUtils

logger = logging.getLogger("fivec")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2
EXIT_CHECK_FAILED = 3


def exit_code_for(error: FiveCError) -> int:
    """Map an error to its documented exit code."""
    if isinstance(error, (ParseError, ConfigError)):
        return EXIT_IO
    if isinstance(error, CheckFailed):
        return EXIT_CHECK_FAILED
    if isinstance(error, ConstructionError) and not isinstance(error, Not5c):
        # construction failing on a 5c input is a bug, not bad input
        return EXIT_CHECK_FAILED
    return EXIT_INVALID


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        FileUtils.write_text_atomic(path, text)
    else:
        print(text, end="")


def load_triangulation(path: str) -> FiveTriangulation:
    """
    Read a rotation-system file as a 5-triangulation.

    Raises:
        ParseError: unreadable or malformed file
        MapError, TriangulationError: the rotation system is not a
            triangulation of the pentagon
    """
    document = load_rotation_system(path)
    return check_five_triangulation(document.to_map(), document.outer, document.symmetry)


def _structure_report(path: str, t: FiveTriangulation) -> Report:
    document = parse_structure(FileUtils.read_json(path), source=path)
    if document.kind == "orientation":
        return validate_orientation(orientation_from_document(document, completion(t)))
    if document.kind == "labeling":
        return validate_labeling(labeling_from_document(document, t))
    return validate_wood(wood_from_document(document, t))


def cmd_validate(config: RunConfig) -> int:
    """Check an input for being a 5c-triangulation; with ``--structure`` also validate a structure on it."""
    path = config.inputs[0]
    try:
        t = load_triangulation(path)
    except ParseError as e:
        logger.error(f"Cannot parse {path}: {e.message}")
        return EXIT_IO
    except (MapError, TriangulationError) as e:
        logger.error(f"{path} is not a 5-triangulation: {e.message}")
        print(FileUtils.dumps_json(e.to_dict()), end="")
        return EXIT_INVALID

    verdict = is_5c(t)
    print(FileUtils.dumps_json({"file": path, "n": t.n, "verdict": verdict.model_dump()}), end="")
    if not verdict.ok:
        logger.info(f"{path}: not 5c ({verdict.reason})")
        return EXIT_INVALID

    if config.structure:
        try:
            report = _structure_report(config.structure, t)
        except ParseError as e:
            logger.error(f"Cannot parse {config.structure}: {e.message}")
            return EXIT_IO
        print(report.summary())
        if not report.ok:
            return EXIT_INVALID
    return EXIT_OK


def build_orientation(t: FiveTriangulation, minimal: bool) -> FiveCOrientation:
    o = construct_5c(t)
    return minimize(o) if minimal else o


def cmd_construct(config: RunConfig) -> int:
    """Emit a 5c-orientation, labeling or wood of the input."""
    path = config.inputs[0]
    try:
        t = load_triangulation(path)
        o = build_orientation(t, config.minimize)
        if config.emit == "orientation":
            document = orientation_document(o)
        elif config.emit == "labeling":
            document = labeling_document(phi_inv(o))
        else:
            document = wood_document(orientation_wood(o))
        _emit(dumps_structure(document), config.out)
    except FiveCError as e:
        logger.error(f"construct failed for {path}: {e.message}")
        if isinstance(e, Not5c):
            print(FileUtils.dumps_json(e.to_dict()), end="")
        return exit_code_for(e)
    logger.info(f"Emitted {config.emit} for {path}")
    return EXIT_OK


class FaceWeight(BaseModel):
    """Weight of the inner face with the given three vertices."""
    vertices: List[int] = Field(..., min_length=3, max_length=3)
    weight: Union[int, float, str]


class FaceWeightFile(BaseModel):
    faces: List[FaceWeight]


def load_face_weights(path: str, t: FiveTriangulation) -> List[Optional[Fraction]]:
    """
    Read per-face weights, indexed by face id of the triangulation.

    Weights may be integers, floats or "p/q" strings. Faces missing from
    the file get ``None`` and are rejected by the weighting.

    Raises:
        ParseError: malformed file, unknown face or unparsable weight
    """
    document = ValidationUtils.parse_model(FileUtils.read_json(path), FaceWeightFile, source=path)
    g = t.map
    face_ids = {frozenset(g.face_vertices(f)): f for f in t.inner_faces}
    result: List[Optional[Fraction]] = [None] * g.num_faces
    for entry in document.faces:
        f = face_ids.get(frozenset(entry.vertices))
        if f is None:
            raise ParseError(f"{path}: {entry.vertices} is not an inner face", witness=entry.vertices)
        try:
            result[f] = Fraction(str(entry.weight))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{path}: bad weight {entry.weight!r}", witness=entry.vertices)
    return result


def run_checks(d: Drawing, w: WoodColoring, symmetric: bool) -> Tuple[List[Report], ResolutionMetrics]:
    """All drawing certificates; the quadratic ones only up to the configured sizes."""
    reports = [certify_planar(d), check_sectors(d, w), check_segments(d)]
    if d.n <= get_settings().FIVEC_ORACLE_MAX_VERTICES:
        reports.append(check_halfplane(d, wood_trees(w)))
    else:
        logger.info(f"Skipping half-plane check for n={d.n}")
    if symmetric:
        reports.append(check_rotational_symmetry(d))
    return reports, resolution(d)


def _verdict_block(reports: List[Report], metrics: ResolutionMetrics) -> str:
    lines = [r.summary() for r in reports]
    lines.append(f"min distance: {metrics.min_distance:.9f} (pair {metrics.closest_pair[0]},{metrics.closest_pair[1]})")
    if metrics.normalized_min is not None:
        status = "meets" if metrics.meets_bound else "below"
        lines.append(f"normalized: {metrics.normalized_min:.9f} {status} bound {metrics.bound:.9f}")
    lines.append("verdict: " + ("certified" if all(r.ok for r in reports) else "FAILED"))
    return "\n".join(lines) + "\n"


def cmd_draw(config: RunConfig) -> int:
    """Construct, draw and optionally certify a drawing."""
    path = config.inputs[0]
    try:
        t = load_triangulation(path)
        face_weights = load_face_weights(config.weights, t) if config.weights else None
        w = orientation_wood(build_orientation(t, config.minimize))
        d = draw_wood(w, config.mode, face_weights)
        metrics = None
        if config.check:
            symmetric = t.automorphism is not None and config.minimize
            reports, metrics = run_checks(d, w, symmetric)
            print(_verdict_block(reports, metrics), end="")
            failed = [r.subject for r in reports if not r.ok]
            if failed:
                raise CheckFailed(f"checks failed on {path}: {', '.join(failed)}", witness=failed)
        if config.svg:
            write_svg(d, config.svg, config.scale, w if config.wood_overlay else None)
        if config.json_out or not (config.svg or config.check):
            _emit(dumps_drawing(d, metrics), config.json_out)
    except FiveCError as e:
        logger.error(f"draw failed for {path}: {e.message}")
        return exit_code_for(e)
    return EXIT_OK


def cmd_gen(config: RunConfig) -> int:
    """
    Write ``count`` random 5c-triangulations. Child seeds come from a
    SeedSequence over ``seed`` so every file is reproducible on its own.
    """
    if not FileUtils.ensure_directory(config.out_dir):
        return EXIT_IO
    children = np.random.SeedSequence(config.seed).spawn(config.count)
    for k, child in enumerate(children):
        seed = int(child.generate_state(1, dtype=np.uint64)[0])
        try:
            t = generate_random_5c(config.n_target, seed, config.flips)
        except FiveCError as e:
            logger.error(f"Generation failed: {e.message}")
            return exit_code_for(e)
        path = os.path.join(config.out_dir, f"5c_n{config.n_target}_s{config.seed}_{k}.json")
        save_rotation_system(rotation_system_of(t.map, t.outer_vertices), path)
        print(path)
    logger.info(f"Generated {config.count} instance(s) with n={config.n_target}")
    return EXIT_OK


class StatsRow(BaseModel):
    """One line of the stats table."""
    file: str
    status: str
    n: Optional[int] = None
    inner_faces: Optional[int] = None
    min_distance: Optional[float] = None
    normalized_min: Optional[float] = None
    bound: Optional[float] = None
    meets_bound: Optional[bool] = None
    seconds: Optional[float] = None


STATS_COLUMNS = list(StatsRow.model_fields)


def stats_row(path: str, mode: str = "faces") -> Dict:
    """Construct and draw one file; returns a StatsRow as a dict so it crosses process boundaries."""
    try:
        t = load_triangulation(path)
    except ParseError:
        return StatsRow(file=path, status="parse_error").model_dump()
    except (MapError, TriangulationError):
        return StatsRow(file=path, status="invalid").model_dump()
    row = StatsRow(file=path, status="ok", n=t.n, inner_faces=t.num_inner_faces)
    start = time.perf_counter()
    try:
        d = draw_wood(orientation_wood(construct_5c(t)), mode)
    except FiveCError as e:
        row.status = e.code
        return row.model_dump()
    row.seconds = round(time.perf_counter() - start, 6)
    metrics = resolution(d)
    row.min_distance = metrics.min_distance
    row.normalized_min = metrics.normalized_min
    row.bound = metrics.bound
    row.meets_bound = metrics.meets_bound
    return row.model_dump()


def stats_csv(rows: List[StatsRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=STATS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in row.model_dump().items()})
    return buffer.getvalue()


def stats_table(rows: List[StatsRow]) -> str:
    lines = [f"{'file':<40} {'status':<10} {'n':>6} {'faces':>6} {'min dist':>12} {'normalized':>11} {'bound':>8} {'sec':>8}"]
    for r in rows:
        def fmt(x, spec):
            return format(x, spec) if x is not None else "-"
        lines.append(
            f"{os.path.basename(r.file):<40} {r.status:<10} {fmt(r.n, '>6')} {fmt(r.inner_faces, '>6')} "
            f"{fmt(r.min_distance, '>12.6g')} {fmt(r.normalized_min, '>11.6f')} {fmt(r.bound, '>8.4f')} {fmt(r.seconds, '>8.3f')}"
        )
    return "\n".join(lines) + "\n"


def cmd_stats(config: RunConfig) -> int:
    """Resolution and timing table over a batch of files."""
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            raw = list(pool.map(stats_row, config.inputs, [config.mode] * len(config.inputs)))
    else:
        raw = [stats_row(path, config.mode) for path in config.inputs]
    rows = [StatsRow(**r) for r in raw]
    print(stats_table(rows), end="")
    if config.csv:
        FileUtils.write_text_atomic(config.csv, stats_csv(rows))
    statuses = {r.status for r in rows}
    if "parse_error" in statuses:
        return EXIT_IO
    if statuses - {"ok"}:
        return EXIT_INVALID
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "construct": cmd_construct,
    "draw": cmd_draw,
    "gen": cmd_gen,
    "stats": cmd_stats,
}
