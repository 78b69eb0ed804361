"""JSON schemas shared by the service, the CLI and the shipped data.

Every rational is serialized as the string "p/q" (or "p" for integers);
parsing and serializing are exact inverses of each other.  Dictionaries
are emitted with sorted keys by the callers, so serialized artifacts are
byte-stable across runs.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import BLACK, WHITE, DualFace, DualGraph
from .coherence import Configuration
from .errors import UsageError
from .motion import MotionScript, motion_script
from .projective import ProjLine, ProjPoint
from .words import FlipEvent, FlipWord


def dump_rational(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational literal: {s!r}") from exc


def _dump_triple(t):
    return [dump_rational(x) for x in t]


def _parse_triple(raw):
    if not isinstance(raw, (list, tuple)) or len(raw) != 3:
        raise UsageError(f"expected a coordinate triple, got {raw!r}")
    return tuple(parse_rational(x) for x in raw)


# -- line sets -------------------------------------------------------------

def lines_to_json(lines):
    return {"lines": [_dump_triple(l.coeffs) for l in lines]}


def lines_from_json(doc):
    if not isinstance(doc, dict) or "lines" not in doc:
        raise UsageError("line-set JSON needs a top-level 'lines' array")
    return [ProjLine(_parse_triple(raw)) for raw in doc["lines"]]


# -- configurations --------------------------------------------------------

def config_to_json(c: Configuration):
    dots = [{"id": d,
             "color": c.dual.colors[d],
             "element": _dump_triple(_coords(c.assignment[d]))
             if d in c.assignment else None}
            for d in sorted(c.dual.colors)]
    faces = [{"corners": list(f.corners),
              "label": list(f.label) if f.label is not None else None}
             for f in c.dual.faces]
    provenance = {str(d): list(rec) for d, rec in
                  sorted(c.provenance.items())}
    return {"dots": dots,
            "edges": [list(e) for e in c.dual.edges],
            "faces": faces,
            "provenance": provenance}


def _coords(el):
    return el.coords if isinstance(el, ProjPoint) else el.coeffs


def config_from_json(doc):
    try:
        colors = {}
        assignment = {}
        for dot in doc["dots"]:
            d = int(dot["id"])
            color = dot["color"]
            if color not in (BLACK, WHITE):
                raise UsageError(f"unknown dot color {color!r}")
            colors[d] = color
            if dot.get("element") is not None:
                cls = ProjPoint if color == BLACK else ProjLine
                assignment[d] = cls(_parse_triple(dot["element"]))
        edges = tuple(sorted(tuple(int(x) for x in e)
                             for e in doc["edges"]))
        faces = tuple(
            DualFace(tuple(int(x) for x in f["corners"]),
                     tuple(f["label"]) if f.get("label") is not None
                     else None)
            for f in doc["faces"])
        provenance = {int(d): tuple(rec)
                      for d, rec in doc.get("provenance", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed configuration JSON: {exc}") from exc
    return Configuration(DualGraph(colors, edges, faces), assignment,
                         provenance)


# -- flip words ------------------------------------------------------------

def word_to_json(w: FlipWord):
    events = []
    for e in w.events:
        site = list(e.site) if e.is_line_triple else e.site
        events.append({"site": site, "direction": e.direction})
    return {"events": events}


def word_from_json(doc):
    try:
        events = []
        for e in doc["events"]:
            site = e["site"]
            site = tuple(int(x) for x in site) if isinstance(site, list) \
                else int(site)
            events.append(FlipEvent(site, e["direction"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed flip-word JSON: {exc}") from exc
    return FlipWord(tuple(events))


# -- motion scripts --------------------------------------------------------

def script_to_json(ms: MotionScript):
    return {"trajectories": [
        [[dump_rational(t), _dump_triple(v)] for t, v in tr.breakpoints]
        for tr in ms.trajectories]}


def script_from_json(doc):
    try:
        raw = [[(parse_rational(t), _parse_triple(v)) for t, v in tr]
               for tr in doc["trajectories"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed motion-script JSON: {exc}") from exc
    return motion_script(raw)
