"""Flip words and the relations behind the braid action.

Words act on configurations by left fold of single flips.  Configurations
are compared as geometric objects: dots created during a word get fresh
ids, so equality is tested up to a relabeling of the fresh dots that
preserves colors, elements, edges and faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coherence import Configuration
from .errors import (InapplicableEvent, NotAnOctogonPattern,
                     OverlappingSupports, ProjflipError)
from .flips import apply_flip, hexagon_at, opposite_direction

MAX_EXHAUSTIVE_MATCH = 8


@dataclass(frozen=True)
class FlipEvent:
    site: object         # dot id, or a sorted triple of line indices
    direction: str

    @property
    def is_line_triple(self) -> bool:
        return isinstance(self.site, tuple)


@dataclass(frozen=True)
class FlipWord:
    events: tuple

    def __len__(self):
        return len(self.events)

    def reversed(self):
        return FlipWord(tuple(
            FlipEvent(e.site, opposite_direction(e.direction))
            for e in reversed(self.events)))


def dot_for_triple(dual, triple):
    """Dot whose three incident faces carry exactly the labels
    {i,j}, {i,k}, {j,k} of the line triple {i,j,k}."""
    i, j, k = sorted(triple)
    want = {(i, j), (i, k), (j, k)}
    hits = []
    for dot in dual.colors:
        labels = {f.label for f in dual.dot_faces(dot)}
        if labels == want:
            hits.append(dot)
    if len(hits) != 1:
        raise InapplicableEvent(f"triple {triple} addresses {len(hits)} dots")
    return hits[0]


def resolve_site(config: Configuration, event: FlipEvent):
    """Dot id addressed by the event in the current configuration."""
    if not event.is_line_triple:
        if event.site not in config.dual.colors:
            raise InapplicableEvent(f"dot {event.site} not in configuration")
        return event.site
    return dot_for_triple(config.dual, event.site)


def apply_event(config: Configuration, event: FlipEvent) -> Configuration:
    return apply_flip(config, resolve_site(config, event), event.direction)


def apply_word(config: Configuration, word: FlipWord) -> Configuration:
    current = config
    for idx, event in enumerate(word.events):
        try:
            current = apply_event(current, event)
        except ProjflipError as exc:
            raise InapplicableEvent(
                f"event {idx} ({event.site}, {event.direction}): {exc}",
                index=idx) from exc
    return current


# -- equality up to relabeling -------------------------------------------

def _face_key(face, relabel):
    cyc = tuple(relabel.get(x, x) for x in face.corners)
    variants = [tuple(cyc[(s + k) % 4] for k in range(4)) for s in range(4)]
    variants += [v[::-1] for v in variants]
    return min(variants)


def _structure_key(config: Configuration, relabel):
    colors = tuple(sorted((relabel.get(d, d), c)
                          for d, c in config.dual.colors.items()))
    elements = tuple(sorted((relabel.get(d, d), e)
                            for d, e in config.assignment.items()))
    edges = tuple(sorted(tuple(sorted((relabel.get(a, a), relabel.get(b, b))))
                         for a, b in config.dual.edges))
    faces = tuple(sorted(_face_key(f, relabel) for f in config.dual.faces))
    return colors, elements, edges, faces


def configurations_equal(c1: Configuration, c2: Configuration) -> bool:
    """Equality up to relabeling of non-shared (fresh) dot ids."""
    ids1, ids2 = set(c1.dual.colors), set(c2.dual.colors)
    if len(ids1) != len(ids2):
        return False
    # dots created by flips are matchable even when both sides happened to
    # reuse the same fresh id; untouched dots stay pinned to their id
    fresh1 = sorted((ids1 - ids2) | (ids1 & set(c1.provenance)))
    fresh2 = sorted((ids2 - ids1) | (ids2 & set(c2.provenance)))
    if len(fresh1) != len(fresh2):
        return False
    if (ids1 - set(fresh1)) != (ids2 - set(fresh2)):
        return False
    if len(fresh1) > MAX_EXHAUSTIVE_MATCH:
        raise ValueError(f"too many unmatched dots ({len(fresh1)})")

    base2 = _structure_key(c2, {})

    def backtrack(k, relabel, used):
        if k == len(fresh1):
            return _structure_key(c1, relabel) == base2
        d = fresh1[k]
        for cand in fresh2:
            if cand in used:
                continue
            if c1.dual.colors[d] != c2.dual.colors[cand]:
                continue
            if c1.assignment.get(d) != c2.assignment.get(cand):
                continue
            relabel[d] = cand
            if backtrack(k + 1, relabel, used | {cand}):
                return True
            del relabel[d]
        return False

    return backtrack(0, {}, set())


# -- relation checks ------------------------------------------------------

def inverse_event(config_after: Configuration, event_before_fresh_id):
    """Event undoing a flip that created `event_before_fresh_id`."""
    dot = event_before_fresh_id
    record = config_after.provenance.get(dot)
    if record is None or record[0] != "flip":
        raise InapplicableEvent(f"dot {dot} has no flip provenance")
    return FlipEvent(dot, opposite_direction(record[2]))


def check_involution(config: Configuration, event: FlipEvent) -> bool:
    """Flip back and forth; the configuration must return to itself."""
    step = apply_event(config, event)
    fresh = max(step.dual.colors)
    back = apply_event(step, inverse_event(step, fresh))
    return configurations_equal(config, back)


def _support(config: Configuration, dot):
    cycle, _ = hexagon_at(config, dot)
    return {dot, *cycle}


def check_commutation(config: Configuration, e1: FlipEvent,
                      e2: FlipEvent) -> bool:
    """Two flips in non-overlapping hexagons commute."""
    d1 = resolve_site(config, e1)
    d2 = resolve_site(config, e2)
    if _support(config, d1) & _support(config, d2):
        raise OverlappingSupports(
            f"hexagons of {e1.site} and {e2.site} overlap")
    one = apply_word(config, FlipWord((e1, e2)))
    two = apply_word(config, FlipWord((e2, e1)))
    return configurations_equal(one, two)


def check_octogon(config: Configuration, cycle: FlipWord) -> bool:
    """An 8-flip cycle across the four triples of four lines.

    The pattern is (t1, t2, t3, t4, t1, t2, t3, t4) on four distinct
    line triples: a loop around the quadruple-point stratum crosses each
    of the four walls twice.  Each second-pass event lands on the fresh
    dot its first-pass partner created, so the directions are determined
    by the configuration, not constrained up front; the word must return
    the configuration to itself.
    """
    events = cycle.events
    if len(events) != 8:
        raise NotAnOctogonPattern(f"octogon word has {len(events)} events")
    if not all(e.is_line_triple for e in events):
        raise NotAnOctogonPattern("octogon events must address line triples")
    sites = [tuple(sorted(e.site)) for e in events]
    if len(set(sites[:4])) != 4 or sites[4:] != sites[:4]:
        raise NotAnOctogonPattern(
            "sites must repeat four distinct triples in the same order")
    terminal = apply_word(config, cycle)
    return configurations_equal(config, terminal)


def words_equal_action(w1: FlipWord, w2: FlipWord, seeds) -> bool:
    """True iff both words act identically on every seed configuration."""
    for idx, seed in enumerate(seeds):
        try:
            t1 = apply_word(seed, w1)
            t2 = apply_word(seed, w2)
        except ProjflipError as exc:
            raise InapplicableEvent(f"seed {idx}: {exc}", index=idx) from exc
        if not configurations_equal(t1, t2):
            return False
    return True


def disjoint_site_pairs(config: Configuration, sites):
    """Pairs of flip sites with non-overlapping hexagon supports."""
    pairs = []
    for (a, da), (b, db) in combinations(sites, 2):
        if not (_support(config, a) & _support(config, b)):
            pairs.append(((a, da), (b, db)))
    return pairs
