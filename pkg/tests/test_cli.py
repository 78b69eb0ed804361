import json

import pytest
from click.testing import CliRunner

from projflip.cli import main
from projflip.flips import POINT_TO_LINE
from projflip.serialize import config_to_json, lines_to_json
from projflip.suite import _load_data


@pytest.fixture
def runner():
    return CliRunner()


def _write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def lines_file(tmp_path, rng):
    from projflip.arrangement import random_generic_lines
    return _write(tmp_path / "lines.json",
                  lines_to_json(random_generic_lines(4, rng)))


def test_arrange(runner, lines_file):
    result = runner.invoke(main, ["arrange", "--lines", lines_file])
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body["regions"] == 7 and len(body["triangles"]) == 4


def test_arrange_nongeneric(runner, tmp_path):
    path = _write(tmp_path / "bad.json", {"lines": [
        ["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"]]})
    result = runner.invoke(main, ["arrange", "--lines", path])
    assert result.exit_code == 2
    assert json.loads(result.output)["error"] == "NotGeneric"


def test_missing_file(runner):
    result = runner.invoke(main, ["arrange", "--lines", "/nope.json"])
    assert result.exit_code == 2
    assert json.loads(result.output)["error"] == "UsageError"


def test_color_and_dual(runner, lines_file):
    result = runner.invoke(main, ["color", "--lines", lines_file])
    assert result.exit_code == 0
    assert set(json.loads(result.output)["colors"].values()) == {"B", "W"}
    result = runner.invoke(main, ["dual", "--lines", lines_file])
    assert result.exit_code == 0
    assert len(json.loads(result.output)["faces"]) == 6


def test_flip_and_word(runner, tmp_path, patch_config):
    config_path = _write(tmp_path / "config.json",
                         config_to_json(patch_config))
    result = runner.invoke(main, ["flip", "--config", config_path,
                                  "--site", "0",
                                  "--direction", POINT_TO_LINE])
    assert result.exit_code == 0
    assert json.loads(result.output)["coherent"]
    word_path = _write(tmp_path / "word.json", {"events": [
        {"site": 0, "direction": "point_to_line"},
        {"site": 7, "direction": "line_to_point"}]})
    result = runner.invoke(main, ["word", "--config", config_path,
                                  "--word", word_path])
    assert result.exit_code == 0
    assert json.loads(result.output)["coherent"]


def test_simulate(runner, tmp_path):
    path = _write(tmp_path / "motion.json", _load_data("four_lines.json"))
    result = runner.invoke(main, ["simulate", "--motion", path])
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert len(body["events"]) == 4 and body["consistent"]


def test_render_files(runner, tmp_path, lines_file):
    svg = tmp_path / "out.svg"
    dot = tmp_path / "out.dot"
    result = runner.invoke(main, ["render", "--lines", lines_file,
                                  "--svg-out", str(svg),
                                  "--dot-out", str(dot)])
    assert result.exit_code == 0
    assert svg.read_text().startswith("<svg ")
    assert dot.read_text().startswith("graph dual {")


def test_verify_mini_suite(runner, tmp_path):
    manifest = {"seed": 5, "checks": [
        {"name": "census", "trials": 2, "sizes": [2, 4]},
        {"name": "octogon"}]}
    path = _write(tmp_path / "suite.json", manifest)
    result = runner.invoke(main, ["verify", "--suite", path])
    assert result.exit_code == 0
    assert json.loads(result.output)["report"]["passed"]


def test_verify_failure_exits_1(runner, tmp_path):
    # tamper with the shipped octagon instance so the cycle cannot close
    doc = _load_data("octagon_instance.json")
    last = doc["word"]["events"][-1]
    last["direction"] = ("line_to_point"
                         if last["direction"] == "point_to_line"
                         else "point_to_line")
    inst = _write(tmp_path / "tampered.json", doc)
    manifest = {"seed": 5, "checks": [{"name": "octogon",
                                       "instance": inst}]}
    path = _write(tmp_path / "suite.json", manifest)
    result = runner.invoke(main, ["verify", "--suite", path])
    assert result.exit_code == 1
    assert not json.loads(result.output)["report"]["passed"]
