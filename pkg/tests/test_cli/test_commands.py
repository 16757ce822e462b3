"""
Tests for the fivec command line.
"""

import csv
import json
import os

import pytest

from src.cli.commands import EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_IO, EXIT_OK, exit_code_for, stats_row
from src.cli.config import RunConfig
from src.cli.parser import run
from src.core.errors import AssemblyError, CheckFailed, ConfigError, Not5c, ParseError
from tests.conftest import fixture_path


def test_validate_exit_codes(capsys, tmp_path):
    assert run(["validate", fixture_path("w5")]) == EXIT_OK
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["n"] == 6
    assert verdict["verdict"]["ok"] is True

    assert run(["validate", fixture_path("non5c")]) == EXIT_INVALID
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["verdict"]["ok"] is False

    broken = tmp_path / "broken.json"
    broken.write_text('{"vertices": 6, "rot": [[1, 5')
    assert run(["validate", str(broken)]) == EXIT_IO
    assert run(["validate", str(tmp_path / "missing.json")]) == EXIT_IO


def test_validate_with_structure(capsys, tmp_path):
    wood = tmp_path / "wood.json"
    assert run(["construct", fixture_path("icosa11"), "--emit", "wood", "--out", str(wood)]) == EXIT_OK
    assert run(["validate", fixture_path("icosa11"), "--structure", str(wood)]) == EXIT_OK
    assert "ok" in capsys.readouterr().out

    data = json.loads(wood.read_text())
    colored = next(arc for arc in data["arcs"] if arc["color"] is not None)
    colored["color"] = colored["color"] % 5 + 1
    wood.write_text(json.dumps(data))
    assert run(["validate", fixture_path("icosa11"), "--structure", str(wood)]) == EXIT_INVALID


def test_construct_emits_wood(capsys):
    assert run(["construct", fixture_path("w5"), "--emit", "wood"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "wood"
    colored = [arc for arc in data["arcs"] if arc["color"] is not None]
    assert len(data["arcs"]) == 10
    assert sorted((arc["tail"], arc["head"], arc["color"]) for arc in colored) == [
        (5, i, i + 1) for i in range(5)
    ]


@pytest.mark.parametrize("emit", ["orientation", "labeling"])
def test_construct_other_structures(capsys, emit):
    assert run(["construct", fixture_path("icosa11"), "--minimize", "--emit", emit]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["kind"] == emit


def test_construct_rejects_non5c(capsys):
    assert run(["construct", fixture_path("non5c")]) == EXIT_INVALID
    assert json.loads(capsys.readouterr().out)["error"] == "not_5c"


def test_draw_check(capsys, tmp_path):
    svg = tmp_path / "icosa11.svg"
    out = tmp_path / "icosa11.json"
    code = run(["draw", fixture_path("icosa11"), "--minimize", "--check", "--svg", str(svg), "--json", str(out), "--wood-overlay"])
    assert code == EXIT_OK
    printed = capsys.readouterr().out
    assert "rotational symmetry: ok" in printed
    assert "verdict: certified" in printed
    assert svg.read_text().startswith("<?xml")
    data = json.loads(out.read_text())
    assert data["n"] == 11
    assert data["metrics"]["meets_bound"] is True


def test_draw_defaults_to_json_on_stdout(capsys):
    assert run(["draw", fixture_path("w5"), "--mode", "vertices"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["mode"] == "vertices"
    assert data["vertices"][5]["weights"] == ["1/5"] * 5


def test_draw_weighted(capsys, tmp_path, w5):
    faces = [{"vertices": [i, (i + 1) % 5, 5], "weight": "1/3" if i else 2} for i in range(5)]
    path = tmp_path / "weights.json"
    path.write_text(json.dumps({"faces": faces}))
    assert run(["draw", fixture_path("w5"), "--mode", "weighted", "--weights", str(path)]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["mode"] == "weighted"
    assert "metrics" not in data

    path.write_text(json.dumps({"faces": faces[1:]}))
    assert run(["draw", fixture_path("w5"), "--mode", "weighted", "--weights", str(path)]) == EXIT_INVALID

    path.write_text(json.dumps({"faces": [{"vertices": [0, 2, 5], "weight": 1}]}))
    assert run(["draw", fixture_path("w5"), "--mode", "weighted", "--weights", str(path)]) == EXIT_IO


def test_flag_errors():
    assert run(["draw", fixture_path("w5"), "--mode", "weighted"]) == EXIT_IO
    assert run(["draw", fixture_path("w5"), "--weights", "w.json"]) == EXIT_IO
    assert run(["gen", "--n", "12", "--count", "0"]) == EXIT_IO
    assert run(["stats", "--mode", "weighted", fixture_path("w5")]) == EXIT_IO
    assert run(["frobnicate"]) == EXIT_IO


def test_run_config_errors():
    with pytest.raises(ConfigError):
        RunConfig.from_args({"command": "gen"})
    with pytest.raises(ConfigError):
        RunConfig.from_args({"command": "draw", "inputs": ["a.json", "b.json"]})
    config = RunConfig.from_args({"command": "draw", "inputs": ["a.json"], "scale": None})
    assert config.scale is None
    assert config.mode == "faces"


def test_gen_is_deterministic(capsys, tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    assert run(["gen", "--n", "14", "--seed", "7", "--count", "2", "--flips", "10", "--out-dir", str(first)]) == EXIT_OK
    assert run(["gen", "--n", "14", "--seed", "7", "--count", "2", "--flips", "10", "--out-dir", str(second)]) == EXIT_OK
    capsys.readouterr()
    names = sorted(os.listdir(first))
    assert names == ["5c_n14_s7_0.json", "5c_n14_s7_1.json"]
    assert names == sorted(os.listdir(second))
    for name in names:
        assert (first / name).read_bytes() == (second / name).read_bytes()
        assert run(["validate", str(first / name)]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["n"] == 14


def test_stats_csv(capsys, tmp_path):
    table = tmp_path / "stats.csv"
    code = run(["stats", fixture_path("w5"), fixture_path("icosa11"), "--csv", str(table)])
    assert code == EXIT_OK
    assert "icosa11.json" in capsys.readouterr().out
    with open(table, newline="") as f:
        rows = list(csv.DictReader(f))
    assert [int(r["inner_faces"]) for r in rows] == [5, 15]
    assert [r["status"] for r in rows] == ["ok", "ok"]
    assert rows[0]["meets_bound"] == "False"
    assert rows[1]["meets_bound"] == "True"


def test_stats_statuses(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("not json")
    assert stats_row(str(broken))["status"] == "parse_error"
    assert stats_row(fixture_path("non5c"))["status"] == "not_5c"
    assert run(["stats", fixture_path("w5"), fixture_path("non5c")]) == EXIT_INVALID
    assert run(["stats", fixture_path("w5"), str(broken)]) == EXIT_IO


def test_exit_code_mapping():
    assert exit_code_for(ParseError("x")) == EXIT_IO
    assert exit_code_for(Not5c("x", provenance="infeasible")) == EXIT_INVALID
    assert exit_code_for(AssemblyError("x")) == EXIT_CHECK_FAILED
    assert exit_code_for(CheckFailed("x")) == EXIT_CHECK_FAILED
