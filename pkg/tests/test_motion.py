from fractions import Fraction as F

import pytest

from projflip.errors import (BreakpointEvent, IdenticallyZero, NotGeneric,
                             QuadruplePoint, SimultaneousEvents, TooFewLines,
                             ZeroVector)
from projflip.flips import LINE_TO_POINT, POINT_TO_LINE
from projflip.motion import (coeffs_at, dual_graphs_equal, event_word,
                             lines_at, motion_script, segment_grid,
                             track_arrangement, track_consistent,
                             triple_event_times)
from projflip.projective import concurrent
from projflip.suite import dense_sign_changes, random_motion_script
from tests.conftest import loop_script


def _static(v, t0=0, t1=2):
    return [(t0, v), (t1, v)]


def test_script_validation():
    with pytest.raises(TooFewLines):
        motion_script([_static((1, 0, 0)), _static((0, 1, 0))])
    with pytest.raises(ValueError):
        motion_script([[(0, (1, 0, 0))],
                       _static((0, 1, 0)), _static((0, 0, 1))])
    with pytest.raises(ValueError):
        motion_script([[(0, (1, 0, 0)), (0, (1, 0, 1))],
                       _static((0, 1, 0)), _static((0, 0, 1))])
    with pytest.raises(ValueError):   # mismatched global interval
        motion_script([[(0, (1, 0, 0)), (3, (1, 0, 1))],
                       _static((0, 1, 0)), _static((0, 0, 1))])
    with pytest.raises(ZeroVector):   # vector sweeps through zero at t=1
        motion_script([[(0, (1, 1, 1)), (2, (-1, -1, -1))],
                       _static((0, 1, 0)), _static((0, 0, 1))])


def test_coeffs_interpolation(half_loop):
    assert coeffs_at(half_loop, 0, F(1, 2)) == (2, -1, 1)
    assert coeffs_at(half_loop, 0, F(3, 2)) == (2, -1, 0)
    with pytest.raises(ValueError):
        coeffs_at(half_loop, 0, 3)
    assert segment_grid(half_loop) == [0, 1, 2]
    assert len(lines_at(half_loop, F(1, 4))) == 4


def test_half_loop_events(half_loop):
    timeline, word = event_word(half_loop)
    expected = [F(1, 2), F(3, 4), F(5, 6), F(3, 2)]
    for ev, t in zip(timeline.events, expected):
        ev.root.refine_below(F(1, 10 ** 6))
        assert ev.root.lo <= t <= ev.root.hi
    triples = [e.triple for e in timeline.events]
    assert triples == [(1, 2, 3), (0, 1, 2), (0, 1, 3), (0, 2, 3)]
    assert len(timeline.samples) == 5
    assert list(timeline.samples) == sorted(timeline.samples)
    for k, t in enumerate(expected):
        assert timeline.samples[k] < t < timeline.samples[k + 1]
    # each expected time really is a concurrency of its triple
    for ev, t in zip(timeline.events, expected):
        lines = lines_at(half_loop, t)
        assert concurrent(*(lines[i] for i in ev.triple))
    assert len(word.events) == 4
    assert [e.site for e in word.events] == triples


def test_full_loop_is_octogon_shaped(full_loop):
    timeline, word = event_word(full_loop)
    sites = [e.site for e in word.events]
    assert len(sites) == 8
    assert sites[4:] == sites[:4]
    assert len(set(sites[:4])) == 4


def test_triple_event_times(half_loop):
    events = triple_event_times(half_loop, (0, 2, 3))
    assert len(events) == 1
    events[0].root.refine_below(F(1, 10 ** 6))
    assert events[0].root.lo <= F(3, 2) <= events[0].root.hi
    assert events[0].sign_before != events[0].sign_after
    with pytest.raises(ValueError):
        triple_event_times(half_loop, (0, 0, 1))


def test_track_consistency(half_loop, full_loop):
    for ms in (half_loop, full_loop):
        track = track_arrangement(ms)
        assert len(track.snapshots) == len(track.timeline.events) + 1
        for snap in track.snapshots:
            assert snap.dual is not None
        assert track_consistent(track)
    # the full loop closes: first and last snapshots agree
    track = track_arrangement(full_loop)
    assert dual_graphs_equal(track.snapshots[0].dual,
                             track.snapshots[-1].dual)


def test_revisit_directions_repeat(full_loop):
    _, word = event_word(full_loop)
    # the second crossing of a wall lands on the fresh dot that the
    # first crossing's partner created, so it flips in the same
    # direction and the cycle closes
    for first, second in zip(word.events[:4], word.events[4:]):
        assert first.site == second.site
        assert first.direction == second.direction


def test_tangency_rejected():
    # det = -(t-1)^2 touches zero without crossing
    raw = [
        [(0, (1, 0, 0)), (2, (1, 2, 0))],
        [(0, (0, -1, 0)), (2, (2, 3, 0))],
        _static((0, 0, 1)),
    ]
    ms = motion_script(raw)
    with pytest.raises(SimultaneousEvents):
        triple_event_times(ms, (0, 1, 2))


def test_quadruple_point_rejected():
    def fan(a, b, scale):
        return [(0, (a, b, -scale * F(1, 2))),
                (1, (a, b, scale * F(1, 2)))]
    # z offsets 1, 2, 4, 8: no triple's determinant vanishes identically
    raw = [fan(1, 0, 1), fan(0, 1, 2), fan(1, 1, 4), fan(1, -1, 8)]
    ms = motion_script(raw)
    with pytest.raises(QuadruplePoint):
        event_word(ms)


def test_identically_zero_rejected():
    raw = [_static((1, 0, -1)), _static((1, 0, -1)), _static((0, 1, 0))]
    ms = motion_script(raw)
    with pytest.raises(IdenticallyZero):
        triple_event_times(ms, (0, 1, 2))


def test_breakpoint_event_rejected():
    raw = [
        [(0, (1, 0, 0)), (1, (1, 0, -1)), (2, (1, 0, -2))],
        _static((0, 1, -1)),
        _static((1, 1, -2)),
    ]
    ms = motion_script(raw)
    with pytest.raises(BreakpointEvent):
        triple_event_times(ms, (0, 1, 2))


def test_nongeneric_snapshot_time_not_sampled(half_loop):
    # the arrangement is degenerate exactly at the event times
    with pytest.raises(NotGeneric):
        from projflip.arrangement import build_arrangement
        build_arrangement(lines_at(half_loop, F(1, 2)))


def test_random_scripts_match_dense_oracle(rng):
    from itertools import combinations
    for _ in range(5):
        ms = random_motion_script(rng)
        timeline, _ = event_word(ms)
        got = {}
        for ev in timeline.events:
            got[ev.triple] = got.get(ev.triple, 0) + 1
        for triple in combinations(range(ms.n), 3):
            assert got.get(triple, 0) == dense_sign_changes(ms, triple)
        assert track_consistent(track_arrangement(ms))
