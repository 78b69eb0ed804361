"""Piecewise-linear line motions and the flip words they carve out.

A motion script moves every line's coefficient triple linearly between
rational breakpoints on a shared time interval.  An event is a time where
three lines become concurrent: the determinant of their coefficient rows
is cubic in t on each segment, and its sign change records the direction
of the wall crossing.  All event times are exact real algebraic numbers
isolated by Sturm sequences; no floating point enters anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arrangement import (BLACK, WHITE, build_arrangement, checkerboard_color,
                          dual_quadrangulation)
from .errors import (BreakpointEvent, IdenticallyZero, NotBipartite,
                     QuadruplePoint, SimultaneousEvents, TooFewLines,
                     ZeroVector)
from .flips import LINE_TO_POINT, POINT_TO_LINE, rewrite_dual
from .projective import ProjLine
from .rootiso import (RealRoot, add, compare_roots, evaluate, isolate_roots,
                      mul, poly, scale)
from .words import FlipEvent, FlipWord, dot_for_triple


@dataclass(frozen=True)
class Trajectory:
    breakpoints: tuple   # ((time, (x, y, z)), ...) with Fraction entries


@dataclass(frozen=True)
class MotionScript:
    trajectories: tuple

    @property
    def n(self):
        return len(self.trajectories)

    @property
    def t0(self):
        return self.trajectories[0].breakpoints[0][0]

    @property
    def t1(self):
        return self.trajectories[0].breakpoints[-1][0]


def motion_script(raw) -> MotionScript:
    """Validate raw trajectories [[(t, (x, y, z)), ...], ...].

    Times must strictly increase and share the first and last value
    across trajectories; the interpolated coefficient vector must never
    vanish inside a segment.
    """
    if len(raw) < 3:
        raise TooFewLines("a motion script needs at least 3 lines")
    trajectories = []
    for entry in raw:
        bps = tuple((Fraction(t), tuple(Fraction(x) for x in v))
                    for t, v in entry)
        if len(bps) < 2:
            raise ValueError("each trajectory needs at least 2 breakpoints")
        for (ta, _), (tb, _) in zip(bps, bps[1:]):
            if tb <= ta:
                raise ValueError("breakpoint times must strictly increase")
        for v in (bps[0][1], bps[-1][1]):
            if len(v) != 3:
                raise ValueError("coefficient triples must have 3 entries")
        trajectories.append(Trajectory(bps))
    t0s = {tr.breakpoints[0][0] for tr in trajectories}
    t1s = {tr.breakpoints[-1][0] for tr in trajectories}
    if len(t0s) != 1 or len(t1s) != 1:
        raise ValueError("trajectories must share the global time interval")
    ms = MotionScript(tuple(trajectories))
    for i, tr in enumerate(ms.trajectories):
        for (ta, va), (tb, vb) in zip(tr.breakpoints, tr.breakpoints[1:]):
            _check_nonvanishing(i, ta, va, tb, vb)
    return ms


def _check_nonvanishing(i, ta, va, tb, vb):
    coords = [(va[k], (vb[k] - va[k]) / (tb - ta)) for k in range(3)]
    nonconst = [(c0, c1) for c0, c1 in coords if c1 != 0]
    if not nonconst and all(c0 == 0 for c0, _ in coords):
        raise ZeroVector(f"line {i} has a zero coefficient vector")
    for c0, c1 in nonconst:
        t = ta - c0 / c1     # root of c0 + c1*(t - ta)
        if ta <= t <= tb and all(
                c0_ + c1_ * (t - ta) == 0 for c0_, c1_ in coords):
            raise ZeroVector(
                f"line {i} passes through the zero vector at t={t}")


def coeffs_at(ms: MotionScript, i, t):
    """Exact coefficient triple of line i at time t."""
    t = Fraction(t)
    bps = ms.trajectories[i].breakpoints
    if not ms.t0 <= t <= ms.t1:
        raise ValueError(f"time {t} outside [{ms.t0}, {ms.t1}]")
    for (ta, va), (tb, vb) in zip(bps, bps[1:]):
        if ta <= t <= tb:
            s = (t - ta) / (tb - ta)
            return tuple(a + s * (b - a) for a, b in zip(va, vb))
    raise AssertionError("time not covered by any segment")


def lines_at(ms: MotionScript, t):
    return [ProjLine(coeffs_at(ms, i, t)) for i in range(ms.n)]


def segment_grid(ms: MotionScript):
    """All breakpoint times of all trajectories, sorted."""
    times = set()
    for tr in ms.trajectories:
        times.update(t for t, _ in tr.breakpoints)
    return sorted(times)


def _linear_vector(ms, i, ta):
    """Coefficient vector of line i as degree-1 polys, valid on the grid
    segment starting at ta."""
    bps = ms.trajectories[i].breakpoints
    for (sa, va), (sb, vb) in zip(bps, bps[1:]):
        if sa <= ta < sb:
            slope = [(b - a) / (sb - sa) for a, b in zip(va, vb)]
            return [poly([a - s * sa, s]) for a, s in zip(va, slope)]
    raise AssertionError("segment start not covered")


def _det_poly(rows):
    r0, r1, r2 = rows
    out = ()
    # expansion along the first row; cyclic minors carry no extra sign
    for k in range(3):
        k1, k2 = (k + 1) % 3, (k + 2) % 3
        minor = add(mul(r1[k1], r2[k2]), scale(mul(r1[k2], r2[k1]), -1))
        out = add(out, mul(r0[k], minor))
    return out


@dataclass
class MotionEvent:
    root: RealRoot
    triple: tuple
    sign_before: int
    sign_after: int

    @property
    def direction(self):
        return POINT_TO_LINE if self.sign_after > 0 else LINE_TO_POINT


def _segment_events(ms, triple, ta, tb):
    rows = [_linear_vector(ms, i, ta) for i in triple]
    p = _det_poly(rows)
    if not p:
        raise IdenticallyZero(
            f"lines {triple} stay concurrent on [{ta}, {tb}]")
    if evaluate(p, ta) == 0 or evaluate(p, tb) == 0:
        raise BreakpointEvent(
            f"lines {triple} are concurrent at a breakpoint of [{ta}, {tb}]")
    roots = isolate_roots(p, ta, tb)
    events = []
    for k, r in enumerate(roots):
        prev_hi = roots[k - 1].hi if k else ta
        next_lo = roots[k + 1].lo if k + 1 < len(roots) else tb
        lo_pt, hi_pt = _straddle(r, roots, k, prev_hi, next_lo)
        before = evaluate(p, lo_pt)
        after = evaluate(p, hi_pt)
        if before == 0 or after == 0 or (before > 0) == (after > 0):
            raise SimultaneousEvents(
                f"lines {triple} touch a wall without crossing near t in "
                f"({r.lo}, {r.hi})")
        events.append(MotionEvent(r, tuple(sorted(triple)),
                                  1 if before > 0 else -1,
                                  1 if after > 0 else -1))
    return events


def _straddle(r, roots, k, prev_hi, next_lo):
    """Rational points strictly between r's root and its neighbors."""
    if r.exact is None:
        return r.lo, r.hi
    x = r.exact
    while k > 0 and roots[k - 1].hi >= x:
        roots[k - 1].refine()
    while k + 1 < len(roots) and roots[k + 1].lo <= x:
        roots[k + 1].refine()
    lo_bound = roots[k - 1].hi if k else prev_hi
    hi_bound = roots[k + 1].lo if k + 1 < len(roots) else next_lo
    return (x + lo_bound) / 2, (x + hi_bound) / 2


def triple_event_times(ms: MotionScript, triple):
    """All concurrency events of one line triple, in time order."""
    if len(set(triple)) != 3:
        raise ValueError("need three distinct line indices")
    grid = segment_grid(ms)
    events = []
    for ta, tb in zip(grid, grid[1:]):
        events.extend(_segment_events(ms, triple, ta, tb))
    return events


@dataclass
class EventTimeline:
    events: tuple        # MotionEvent, globally ordered
    samples: tuple       # len(events) + 1 rational times between events
    t0: Fraction
    t1: Fraction


def event_word(ms: MotionScript):
    """Order all events of all triples into a timeline and a flip word.

    Coinciding event times are rejected: as a quadruple point when the
    two triples share two lines, as a simultaneity otherwise.
    """
    events = []
    for triple in combinations(range(ms.n), 3):
        events.extend(triple_event_times(ms, triple))
    ordered = []
    for ev in events:
        k = 0
        while k < len(ordered):
            c = compare_roots(ev.root, ordered[k].root)
            if c == 0:
                shared = set(ev.triple) & set(ordered[k].triple)
                if len(shared) == 2:
                    raise QuadruplePoint(
                        f"lines {sorted(set(ev.triple) | set(ordered[k].triple))} "
                        "meet at a quadruple point")
                raise SimultaneousEvents(
                    f"triples {ev.triple} and {ordered[k].triple} "
                    "flip at the same time")
            if c < 0:
                break
            k += 1
        ordered.insert(k, ev)
    timeline = EventTimeline(tuple(ordered), _samples(ms, ordered),
                             ms.t0, ms.t1)
    return timeline, _word_of(ms, timeline)


def _word_of(ms, timeline):
    """Word of the timeline, with directions read off the checkerboard
    coloring when one exists.

    The determinant's sign depends on the chosen coefficient scaling, so
    it cannot say which color the collapsing dot has; the coloring of
    the initial snapshot, carried through the rewrites, can.  Odd n has
    no coloring and keeps the raw sign convention.
    """
    try:
        arr = build_arrangement(lines_at(ms, timeline.samples[0]))
        dual = dual_quadrangulation(arr, checkerboard_color(arr))
    except NotBipartite:
        return FlipWord(tuple(
            FlipEvent(e.triple, e.direction) for e in timeline.events))
    events = []
    for e in timeline.events:
        dot = dot_for_triple(dual, e.triple)
        direction = (POINT_TO_LINE if dual.colors[dot] == BLACK
                     else LINE_TO_POINT)
        events.append(FlipEvent(e.triple, direction))
        dual = rewrite_dual(dual, dot)[0]
    return FlipWord(tuple(events))


def _samples(ms, ordered):
    if not ordered:
        return ((ms.t0 + ms.t1) / 2,)
    first = ordered[0].root
    while first.lo <= ms.t0:
        first.refine()
        if first.exact is not None and first.lo > ms.t0:
            break
    samples = [(ms.t0 + first.lo) / 2]
    for a, b in zip(ordered, ordered[1:]):
        ra, rb = a.root, b.root
        while not ra.hi < rb.lo:
            if ra.exact is not None and rb.exact is not None:
                break
            ra.refine()
            rb.refine()
        if ra.exact is not None and rb.exact is not None and ra.hi >= rb.lo:
            samples.append((ra.exact + rb.exact) / 2)
        else:
            samples.append((ra.hi + rb.lo) / 2)
    last = ordered[-1].root
    while last.hi >= ms.t1:
        last.refine()
        if last.exact is not None and last.hi < ms.t1:
            break
    samples.append((last.hi + ms.t1) / 2)
    return tuple(samples)


@dataclass(frozen=True)
class Snapshot:
    time: Fraction
    arrangement: object
    coloring: object
    dual: object


@dataclass(frozen=True)
class MotionTrack:
    script: MotionScript
    timeline: EventTimeline
    word: FlipWord
    snapshots: tuple


def track_arrangement(ms: MotionScript) -> MotionTrack:
    """One arrangement snapshot per inter-event interval.

    Snapshot times are exact rationals strictly between consecutive
    events, so every snapshot is generic.  Duals are included when the
    arrangement admits a checkerboard coloring (even n).
    """
    timeline, word = event_word(ms)
    snaps = []
    for t in timeline.samples:
        arr = build_arrangement(lines_at(ms, t))
        try:
            col = checkerboard_color(arr)
            dual = dual_quadrangulation(arr, col)
        except NotBipartite:
            col = dual = None
        snaps.append(Snapshot(t, arr, col, dual))
    return MotionTrack(ms, timeline, word, tuple(snaps))


# -- snapshot comparison --------------------------------------------------

def _dual_dot_key(dual, colors, dot):
    labels = tuple(sorted(f.label for f in dual.dot_faces(dot)))
    return colors[dot], labels


def _face_canon(face, relabel):
    cyc = tuple(relabel[x] for x in face.corners)
    variants = [tuple(cyc[(s + k) % 4] for k in range(4)) for s in range(4)]
    variants += [v[::-1] for v in variants]
    return min(variants), face.label


def _swap(colors):
    return {d: (WHITE if c == BLACK else BLACK) for d, c in colors.items()}


def dual_graphs_equal(d1, d2) -> bool:
    """Label-respecting isomorphism of dual graphs, up to a global color
    swap (the checkerboard base region may differ between snapshots)."""
    if len(d1.colors) != len(d2.colors) or len(d1.faces) != len(d2.faces):
        return False
    for colors1 in (dict(d1.colors), _swap(d1.colors)):
        if _match_duals(d1, colors1, d2):
            return True
    return False


def _match_duals(d1, colors1, d2):
    key2 = {}
    for dot in d2.colors:
        key2.setdefault(_dual_dot_key(d2, d2.colors, dot), []).append(dot)
    dots1 = sorted(
        d1.colors,
        key=lambda d: len(key2.get(_dual_dot_key(d1, colors1, d), [])))

    edges2 = sorted(tuple(sorted(e)) for e in d2.edges)
    faces2 = sorted(_face_canon(f, {d: d for d in d2.colors})
                    for f in d2.faces)

    def check(relabel):
        edges1 = sorted(tuple(sorted((relabel[a], relabel[b])))
                        for a, b in d1.edges)
        if edges1 != edges2:
            return False
        return sorted(_face_canon(f, relabel) for f in d1.faces) == faces2

    def backtrack(k, relabel, used):
        if k == len(dots1):
            return check(relabel)
        d = dots1[k]
        for cand in key2.get(_dual_dot_key(d1, colors1, d), []):
            if cand in used:
                continue
            relabel[d] = cand
            if backtrack(k + 1, relabel, used | {cand}):
                return True
            del relabel[d]
        return False

    return backtrack(0, {}, set())


def track_consistent(track: MotionTrack) -> bool:
    """Consecutive snapshots must differ by one hexagon rewrite at the
    event triple's dot."""
    for k, ev in enumerate(track.timeline.events):
        before = track.snapshots[k].dual
        after = track.snapshots[k + 1].dual
        if before is None or after is None:
            raise NotBipartite("snapshots have no duals to compare")
        dot = dot_for_triple(before, ev.triple)
        expected, _, _ = rewrite_dual(before, dot)
        if not dual_graphs_equal(expected, after):
            return False
    return True
