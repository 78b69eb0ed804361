import json
import random

import pytest

from projflip.errors import UsageError
from projflip.suite import (default_manifest, report_text, run_suite)

MINI = {
    "seed": 7,
    "checks": [
        {"name": "census", "trials": 3, "sizes": [2, 4]},
        {"name": "coloring", "trials": 3, "even": [2, 4], "odd": [3]},
        {"name": "desargues-sweep", "trials": 20},
        {"name": "involution", "trials": 5},
        {"name": "commutation", "trials": 2},
        {"name": "octogon"},
        {"name": "motion", "trials": 1},
    ],
}


def test_mini_suite_passes_and_is_byte_stable():
    r1 = run_suite(MINI)
    r2 = run_suite(MINI)
    assert r1["passed"]
    assert report_text(r1) == report_text(r2)
    assert len(r1["reports"]) == len(MINI["checks"])
    for rep in r1["reports"]:
        assert rep["passed"]


def test_seed_env_override(monkeypatch):
    monkeypatch.setenv("PROJFLIP_SEED", "99")
    manifest = {"seed": 7, "checks": [{"name": "census", "trials": 1,
                                       "sizes": [2]}]}
    assert run_suite(manifest)["seed"] == 99


def test_unknown_check_rejected():
    with pytest.raises(UsageError):
        run_suite({"seed": 1, "checks": [{"name": "nope"}]})


def test_default_manifest_shape():
    manifest = default_manifest()
    names = [c["name"] for c in manifest["checks"]]
    assert names == ["census", "coloring", "desargues-sweep", "involution",
                     "commutation", "octogon", "motion"]
    assert isinstance(manifest["seed"], int)


def test_octogon_instance_from_path(tmp_path):
    from projflip.suite import _load_data
    doc = _load_data("octagon_instance.json")
    alt = tmp_path / "inst.json"
    alt.write_text(json.dumps(doc))
    manifest = {"seed": 1,
                "checks": [{"name": "octogon", "instance": str(alt)}]}
    assert run_suite(manifest)["passed"]
