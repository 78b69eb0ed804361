import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from projflip.errors import UsageError
from projflip.flips import LINE_TO_POINT, POINT_TO_LINE
from projflip.serialize import (config_from_json, config_to_json,
                                dump_rational, lines_from_json,
                                lines_to_json, parse_rational,
                                script_from_json, script_to_json,
                                word_from_json, word_to_json)
from projflip.words import FlipEvent, FlipWord
from tests.conftest import loop_script


def test_rational_strings():
    assert dump_rational(F(3, 4)) == "3/4"
    assert dump_rational(F(-8, 2)) == "-4"
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-4") == F(-4)
    for bad in ("x", "1/0", "", "1.5.2"):
        with pytest.raises(UsageError):
            parse_rational(bad)


@given(st.fractions(max_denominator=10 ** 6))
def test_rational_round_trip(f):
    assert parse_rational(dump_rational(f)) == f


def test_lines_round_trip(rng):
    from projflip.arrangement import random_generic_lines
    lines = random_generic_lines(5, rng)
    doc = json.loads(json.dumps(lines_to_json(lines)))
    assert lines_from_json(doc) == lines
    with pytest.raises(UsageError):
        lines_from_json({"rows": []})
    with pytest.raises(UsageError):
        lines_from_json({"lines": [["1", "2"]]})


def test_config_round_trip(patch_config):
    doc = json.loads(json.dumps(config_to_json(patch_config)))
    back = config_from_json(doc)
    assert back.dual == patch_config.dual
    assert back.assignment == patch_config.assignment
    assert back.provenance == patch_config.provenance


def test_config_round_trip_after_flip(patch_config):
    from projflip.flips import apply_flip
    out = apply_flip(patch_config, 0, POINT_TO_LINE)
    back = config_from_json(json.loads(json.dumps(config_to_json(out))))
    assert back.dual == out.dual
    assert back.assignment == out.assignment
    assert back.provenance == out.provenance


def test_config_malformed():
    with pytest.raises(UsageError):
        config_from_json({"dots": [{"id": 0, "color": "R"}],
                          "edges": [], "faces": []})
    with pytest.raises(UsageError):
        config_from_json({"edges": [], "faces": []})


def test_word_round_trip():
    w = FlipWord((FlipEvent(3, POINT_TO_LINE),
                  FlipEvent((0, 1, 2), LINE_TO_POINT)))
    doc = json.loads(json.dumps(word_to_json(w)))
    assert word_from_json(doc) == w
    with pytest.raises(UsageError):
        word_from_json({"events": [{"site": "x"}]})


def test_script_round_trip():
    ms = loop_script(2)
    doc = json.loads(json.dumps(script_to_json(ms)))
    assert script_from_json(doc) == ms
    with pytest.raises(UsageError):
        script_from_json({"trajectories": [[["0", ["1", "2"]]]]})


def test_shipped_data_parses():
    from projflip.suite import _load_data
    script_from_json(_load_data("four_lines.json"))
    script_from_json(_load_data("octagon_motion.json"))
    inst = _load_data("octagon_instance.json")
    config_from_json(inst["configuration"])
    assert len(word_from_json(inst["word"]).events) == 8
