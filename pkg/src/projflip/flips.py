"""The Desargues flip as an exact geometric rewrite.

A flip site is a degree-3 dot of a configuration together with the hexagon
of the three quadrilateral faces around it.  The flip replaces the center
element by the axis of perspectivity of the two triangles encoded in the
hexagon (or, dually, by their center of perspectivity), reattaching the
center to the other three boundary dots.  The rewritten configuration is
re-validated, never assumed coherent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import BLACK, WHITE, DualFace, DualGraph
from .coherence import Configuration, validate_configuration
from .errors import (DegenerateSite, IncoherentResult, NotAFlipSite,
                     SideLinesCoincide)
from .projective import (ProjLine, ProjPoint, _cross, _dot, collinear,
                         concurrent, incident, join, meet)

POINT_TO_LINE = "point_to_line"
LINE_TO_POINT = "line_to_point"
DIRECTIONS = (POINT_TO_LINE, LINE_TO_POINT)


def opposite_direction(direction):
    return LINE_TO_POINT if direction == POINT_TO_LINE else POINT_TO_LINE


@dataclass(frozen=True)
class FlipSite:
    center: ProjPoint
    rays: tuple          # three concurrent ProjLine through the center
    triangle1: tuple     # (A, B, C)
    triangle2: tuple     # (A', B', C'), pairwise on the matching rays
    sides1: tuple        # (AB), (BC), (CA)
    sides2: tuple        # (A'B'), (B'C'), (C'A')


@dataclass(frozen=True)
class FlipResult:
    axis: ProjLine
    axis_points: tuple   # X = AB^A'B', Y = BC^B'C', Z = CA^C'A'


def make_flip_site(center, triangle1, triangle2) -> FlipSite:
    """Assemble and validate a perspective-from-a-point site."""
    a, b, c = triangle1
    a2, b2, c2 = triangle2
    for v in (*triangle1, *triangle2):
        if v == center:
            raise DegenerateSite("triangle vertex coincides with the center")
    if collinear(a, b, c) or collinear(a2, b2, c2):
        raise DegenerateSite("degenerate triangle")
    rays = []
    for v, w in ((a, a2), (b, b2), (c, c2)):
        if v == w:
            raise DegenerateSite("matching vertices coincide")
        rays.append(join(v, w))
        if not incident(center, rays[-1]):
            raise DegenerateSite("vertex pair not aligned with the center")
    if len({rays[0], rays[1], rays[2]}) != 3:
        raise DegenerateSite("repeated ray")
    sides1 = (join(a, b), join(b, c), join(c, a))
    sides2 = (join(a2, b2), join(b2, c2), join(c2, a2))
    return FlipSite(center, tuple(rays), tuple(triangle1), tuple(triangle2),
                    sides1, sides2)


def desargues_axis(site: FlipSite) -> FlipResult:
    """Axis of perspectivity; collinearity is checked, not assumed."""
    if not concurrent(*site.rays):
        raise DegenerateSite("rays are not concurrent")
    points = []
    for s1, s2 in zip(site.sides1, site.sides2):
        if s1 == s2:
            raise SideLinesCoincide(
                "corresponding side lines coincide; axis underdetermined")
        points.append(meet(s1, s2))
    x, y, z = points
    if not collinear(x, y, z):
        raise AssertionError("Desargues collinearity failed on a valid site")
    for p, q in ((x, y), (y, z), (x, z)):
        if p != q:
            return FlipResult(join(p, q), (x, y, z))
    raise DegenerateSite("axis points all coincide; axis underdetermined")


# -- flips on configurations ----------------------------------------------

def hexagon_at(target, dot):
    """The hexagon boundary cycle around a degree-3 dot.

    Accepts a Configuration or a bare DualGraph.  Returns (d1..d6, faces)
    with the dot's neighbors at odd positions.  Face orientations need not
    agree globally (the surface may be non-orientable), so chains are
    stitched up to reversal.
    """
    dual = target.dual if isinstance(target, Configuration) else target
    if dot not in dual.colors:
        raise NotAFlipSite(f"unknown dot {dot}")
    faces = dual.dot_faces(dot)
    if len(faces) != 3:
        raise NotAFlipSite(f"dot {dot} lies in {len(faces)} faces, not 3")
    paths = []
    for f in faces:
        c = f.corners
        k = c.index(dot)
        paths.append([c[(k + 1) % 4], c[(k + 2) % 4], c[(k + 3) % 4]])
    first, rest = paths[0], paths[1:]
    cycle = list(first)
    while rest:
        tail = cycle[-1]
        for i, p in enumerate(rest):
            if p[0] == tail:
                cycle.extend(p[1:])
                rest.pop(i)
                break
            if p[2] == tail:
                cycle.extend([p[1], p[0]])
                rest.pop(i)
                break
        else:
            raise NotAFlipSite("faces around the dot do not close a hexagon")
    if cycle[-1] != cycle[0] or len(cycle) != 7:
        raise NotAFlipSite("faces around the dot do not close a hexagon")
    cycle = cycle[:6]
    if len(set(cycle)) != 6:
        raise NotAFlipSite("hexagon boundary dots are not distinct")
    center_color = dual.colors[dot]
    for k, d in enumerate(cycle):
        want = center_color if k % 2 else _other(center_color)
        if dual.colors[d] != want:
            raise NotAFlipSite("hexagon colors do not alternate")
    return tuple(cycle), faces


def _other(color):
    return WHITE if color == BLACK else BLACK


def site_of_dot(config: Configuration, dot, direction) -> FlipSite:
    """Realize the hexagon around `dot` as a Desargues flip site.

    For LINE_TO_POINT the site is assembled in the dual plane, where the
    white center becomes a point and the construction is identical.
    """
    color = config.dual.colors[dot]
    if direction == POINT_TO_LINE and color != BLACK:
        raise NotAFlipSite("point-to-line flip needs a black center")
    if direction == LINE_TO_POINT and color != WHITE:
        raise NotAFlipSite("line-to-point flip needs a white center")
    cycle, _ = hexagon_at(config, dot)
    center = config.element(dot)
    m = [config.element(cycle[k]) for k in (0, 2, 4)]
    q = [config.element(cycle[k]) for k in (1, 3, 5)]
    if direction == LINE_TO_POINT:
        center = center.dual()
        m = [x.dual() for x in m]
        q = [x.dual() for x in q]
    if len({m[0], m[1], m[2]}) != 3:
        raise DegenerateSite("repeated hexagon line")
    if concurrent(m[0], m[1], m[2]):
        raise DegenerateSite("hexagon lines are concurrent")
    triangle1 = (meet(m[0], m[1]), meet(m[1], m[2]), meet(m[2], m[0]))
    triangle2 = (q[0], q[1], q[2])
    return make_flip_site(center, triangle1, triangle2)


def new_center_element(config: Configuration, dot, direction):
    site = site_of_dot(config, dot, direction)
    axis = desargues_axis(site).axis
    if direction == POINT_TO_LINE:
        return axis
    return axis.dual()


def rewrite_dual(dual: DualGraph, dot):
    """Combinatorial hexagon rewrite at a degree-3 dot.

    Replaces the center by a fresh dot attached to the even boundary
    positions; new faces inherit the label of the old face on the
    opposite side.  Returns (new dual, fresh id, hexagon cycle).
    """
    cycle, faces = hexagon_at(dual, dot)
    fresh = max(dual.colors) + 1
    colors = dict(dual.colors)
    del colors[dot]
    colors[fresh] = _other(dual.colors[dot])

    d1, d2, d3, d4, d5, d6 = cycle
    old_by_missing = {}
    for f in faces:
        for probe, key in ((d5, "a"), (d1, "b"), (d3, "c")):
            if probe not in f.corners:
                old_by_missing[key] = f
    if len(old_by_missing) != 3:
        raise NotAFlipSite("hexagon faces do not partition the boundary")
    # the new face through d_k inherits the label of the old face avoiding d_k
    new_faces = (
        DualFace((fresh, d2, d3, d4), old_by_missing["c"].label),
        DualFace((fresh, d4, d5, d6), old_by_missing["a"].label),
        DualFace((fresh, d6, d1, d2), old_by_missing["b"].label),
    )
    kept = tuple(f for f in dual.faces if f not in faces)

    edges = list(dual.edges)
    for nb in (d1, d3, d5):
        edges.remove(tuple(sorted((dot, nb))))
    for nb in (d2, d4, d6):
        edges.append(tuple(sorted((fresh, nb))))
    edges.sort()
    return DualGraph(colors, tuple(edges), kept + new_faces), fresh, cycle


def apply_flip(config: Configuration, dot, direction) -> Configuration:
    """Flip at a degree-3 dot, returning a re-validated configuration."""
    element = new_center_element(config, dot, direction)
    dual, fresh, _ = rewrite_dual(config.dual, dot)

    assignment = dict(config.assignment)
    del assignment[dot]
    assignment[fresh] = element
    provenance = dict(config.provenance)
    provenance[fresh] = ("flip", dot, direction)

    out = Configuration(dual, assignment, provenance)
    report = validate_configuration(out)
    if not report.ok:
        raise IncoherentResult(f"flip produced incoherent tiles: "
                               f"{report.failures}")
    return out


def find_flip_sites(config: Configuration):
    """All (dot, direction) pairs where apply_flip's preconditions hold."""
    sites = []
    for dot in sorted(config.dual.colors):
        direction = (POINT_TO_LINE if config.dual.colors[dot] == BLACK
                     else LINE_TO_POINT)
        try:
            site_of_dot(config, dot, direction)
            desargues_axis(site_of_dot(config, dot, direction))
        except (NotAFlipSite, DegenerateSite, SideLinesCoincide):
            continue
        sites.append((dot, direction))
    return sites
