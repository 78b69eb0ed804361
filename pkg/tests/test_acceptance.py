"""End-to-end acceptance gate: exact, zero tolerance, timed where noted."""

import random
import time
from itertools import combinations

import pytest

from projflip.arrangement import (BLACK, WHITE, build_arrangement,
                                  cell_census, checkerboard_color,
                                  dual_quadrangulation, random_generic_lines)
from projflip.coherence import seed_configuration
from projflip.errors import NotBipartite, ProjflipError
from projflip.flips import (POINT_TO_LINE, desargues_axis,
                            opposite_direction)
from projflip.motion import event_word, track_arrangement, track_consistent
from projflip.projective import collinear
from projflip.serialize import (config_from_json, script_from_json,
                                word_from_json)
from projflip.suite import (_load_data, _random_perspective_site,
                            check_octogon_instance, default_manifest,
                            dense_sign_changes, double_patch, hexagon_patch,
                            random_motion_script, report_text, run_suite)
from projflip.words import (FlipEvent, FlipWord, check_commutation,
                            check_involution, check_octogon,
                            configurations_equal, disjoint_site_pairs)

SEED = 20260823


def test_criterion_1_region_count_law():
    start = time.monotonic()
    rng = random.Random(SEED)
    for n in (2, 4, 6, 8):
        for _ in range(50):
            arr = build_arrangement(random_generic_lines(n, rng))
            v, e, f, euler = cell_census(arr)
            assert v == n * (n - 1) // 2
            assert e == n * (n - 1)
            assert f == n * (n - 1) // 2 + 1
            assert euler == 1
    assert time.monotonic() - start < 10


def test_criterion_2_checkerboard_law():
    rng = random.Random(SEED)
    for n in (2, 4, 6, 8):
        for _ in range(50):
            arr = build_arrangement(random_generic_lines(n, rng))
            col = checkerboard_color(arr)
            for left, right in arr.arc_regions:
                assert col.colors[left] != col.colors[right]
    for n in (3, 5):
        for _ in range(50):
            arr = build_arrangement(random_generic_lines(n, rng))
            with pytest.raises(NotBipartite):
                checkerboard_color(arr)


def test_criterion_3_dual_quadrangulation():
    rng = random.Random(SEED)
    for n in (2, 4, 6, 8):
        for _ in range(50):
            arr = build_arrangement(random_generic_lines(n, rng))
            dual = dual_quadrangulation(arr, checkerboard_color(arr))
            for face in dual.faces:
                assert len(face.corners) == 4
                cols = [dual.colors[c] for c in face.corners]
                assert cols[0] == cols[2] != cols[1] == cols[3]
                assert set(cols) == {BLACK, WHITE}


def test_criterion_4_desargues_sweep():
    start = time.monotonic()
    rng = random.Random(SEED)
    done = 0
    while done < 1000:
        site = _random_perspective_site(rng)
        try:
            result = desargues_axis(site)
        except ProjflipError:
            continue
        assert collinear(*result.axis_points)
        done += 1
    assert time.monotonic() - start < 30


def test_criterion_5_involution():
    rng = random.Random(SEED)
    dual = hexagon_patch()
    for _ in range(100):
        config = seed_configuration(dual, rng)
        assert check_involution(config, FlipEvent(0, POINT_TO_LINE))


def test_criterion_6_commutation():
    rng = random.Random(SEED)
    dual = double_patch()
    for _ in range(25):
        config = seed_configuration(dual, rng)
        sites = [(0, POINT_TO_LINE), (10, POINT_TO_LINE)]
        pairs = disjoint_site_pairs(config, sites)
        assert pairs
        for (a, da), (b, db) in pairs:
            assert check_commutation(config, FlipEvent(a, da),
                                     FlipEvent(b, db))


def test_criterion_7_octogon():
    doc = _load_data("octagon_instance.json")
    config = config_from_json(doc["configuration"])
    word = word_from_json(doc["word"])
    assert len(word.events) == 8
    assert check_octogon(config, word)
    last = word.events[7]
    mutated = FlipWord(word.events[:7] + (
        FlipEvent(last.site, opposite_direction(last.direction)),))
    try:
        closed = check_octogon(config, mutated)
    except ProjflipError:
        closed = False
    assert not closed
    report = check_octogon_instance(config, word)
    assert report["passed"]


def test_criterion_8_motion_oracle():
    start = time.monotonic()
    rng = random.Random(SEED)
    for _ in range(20):
        segments = rng.choice((1, 2, 3))
        ms = random_motion_script(rng, n=4, segments=segments)
        timeline, _ = event_word(ms)
        counts = {}
        for ev in timeline.events:
            counts[ev.triple] = counts.get(ev.triple, 0) + 1
        for triple in combinations(range(4), 3):
            assert counts.get(triple, 0) == dense_sign_changes(ms, triple)
        assert track_consistent(track_arrangement(ms))
    ms = script_from_json(_load_data("four_lines.json"))
    timeline, word = event_word(ms)
    assert len(timeline.events) == 4
    assert len(word.events) == 4
    assert time.monotonic() - start < 60


def test_criterion_9_determinism():
    manifest = default_manifest()
    r1 = run_suite(manifest)
    r2 = run_suite(manifest)
    assert r1["passed"] and r2["passed"]
    assert report_text(r1) == report_text(r2)
