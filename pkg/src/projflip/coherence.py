"""Tiles, the coherence predicate, and coherent configurations.

A configuration assigns a point to every black dot and a line to every
white dot of a quadrilateral dual graph; it is coherent when every
quadrilateral face, read as a tile (A, l, B, m), satisfies: no corner
point lies on a corner line, and either A = B, or l = m, or the line AB
passes through the intersection of l and m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .arrangement import BLACK, WHITE, DualGraph
from .errors import (CoincidentLines, IncidentInput, MissingAssignment,
                     SeedingFailed)
from .projective import ProjLine, ProjPoint, incident, join, meet


@dataclass(frozen=True)
class Tile:
    a: ProjPoint
    ell: ProjLine
    b: ProjPoint
    m: ProjLine


def is_coherent_tile(t: Tile) -> bool:
    """Exact coherence test, degenerate clauses first."""
    if incident(t.a, t.ell) or incident(t.a, t.m):
        return False
    if incident(t.b, t.ell) or incident(t.b, t.m):
        return False
    if t.a == t.b or t.ell == t.m:
        return True
    return incident(meet(t.ell, t.m), join(t.a, t.b))


def coherent_partner_locus(a: ProjPoint, ell: ProjLine, m: ProjLine) -> ProjLine:
    """The line of all partners B completing (a, ell, B, m) coherently."""
    if incident(a, ell) or incident(a, m):
        raise IncidentInput(f"{a} lies on a corner line")
    if ell == m:
        raise CoincidentLines("locus undefined for a repeated corner line")
    return join(a, meet(ell, m))


@dataclass(frozen=True)
class Configuration:
    dual: DualGraph
    assignment: dict          # dot id -> ProjPoint (black) / ProjLine (white)
    provenance: dict = field(default_factory=dict)  # fresh dot id -> record

    def element(self, dot):
        try:
            return self.assignment[dot]
        except KeyError:
            raise MissingAssignment(f"dot {dot} has no element") from None

    def tile_of_face(self, face) -> Tile:
        corners = face.corners
        start = next(k for k in range(4)
                     if self.dual.colors[corners[k]] == BLACK)
        a, ell, b, m = (self.element(corners[(start + k) % 4])
                        for k in range(4))
        return Tile(a, ell, b, m)


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple     # (face index, clause) pairs

    @property
    def ok(self) -> bool:
        return not self.failures


def _tile_failure(t: Tile):
    for p, l, name in ((t.a, t.ell, "A on l"), (t.a, t.m, "A on m"),
                       (t.b, t.ell, "B on l"), (t.b, t.m, "B on m")):
        if incident(p, l):
            return name
    if t.a == t.b or t.ell == t.m:
        return None
    if not incident(meet(t.ell, t.m), join(t.a, t.b)):
        return "AB misses meet(l,m)"
    return None


def validate_configuration(c: Configuration) -> ValidationReport:
    failures = []
    for idx, face in enumerate(c.dual.faces):
        for corner in face.corners:
            want = ProjPoint if c.dual.colors[corner] == BLACK else ProjLine
            if not isinstance(c.element(corner), want):
                failures.append((idx, "element type mismatch"))
                break
        else:
            clause = _tile_failure(c.tile_of_face(face))
            if clause is not None:
                failures.append((idx, clause))
    return ValidationReport(tuple(failures))


# -- random elements ------------------------------------------------------

def random_point(rng, bound=20) -> ProjPoint:
    while True:
        t = tuple(rng.randint(-bound, bound) for _ in range(3))
        if any(t):
            return ProjPoint(t)


def random_line(rng, bound=20) -> ProjLine:
    return ProjLine(random_point(rng, bound).coords)


# -- constructive seeding -------------------------------------------------
#
# Elements are assigned dot by dot.  A dot whose faces are not yet complete
# is free (random); one completed face forces the element onto a pencil or
# a line (one parameter); two force it outright.  A dot closing three or
# more faces yields residual equations; one earlier free choice is kept
# symbolic so the residuals become univariate polynomials, solved exactly
# over the rationals.  Unsolvable closures are reported, never fudged.

def _sym_cross(u, v):
    return sympy.Matrix([u[1] * v[2] - u[2] * v[1],
                         u[2] * v[0] - u[0] * v[2],
                         u[0] * v[1] - u[1] * v[0]])


def _sym_dot(u, v):
    return sympy.expand(u[0] * v[0] + u[1] * v[1] + u[2] * v[2])


def _is_zero_vec(v) -> bool:
    return all(sympy.expand(x) == 0 for x in v)


def _span_of(triple):
    """Two independent representatives of the 1-parameter family dual to
    a fixed triple (points on a line / lines through a point)."""
    basis = [sympy.Matrix([1, 0, 0]), sympy.Matrix([0, 1, 0]),
             sympy.Matrix([0, 0, 1])]
    reps = [_sym_cross(triple, e) for e in basis]
    reps = [r for r in reps if not _is_zero_vec(r)]
    for i in range(1, len(reps)):
        if not _is_zero_vec(_sym_cross(reps[0], reps[i])):
            return reps[0], reps[i]
    raise SeedingFailed("degenerate span")


def _rand_vec(rng, bound=20):
    while True:
        v = sympy.Matrix([sympy.Integer(rng.randint(-bound, bound))
                          for _ in range(3)])
        if any(x != 0 for x in v):
            return v


def _choose_order(dual, rng):
    """Assignment order postponing face closures as long as possible."""
    remaining = set(dual.colors)
    assigned = set()
    order = []
    while remaining:
        def pressure(d):
            return sum(1 for f in dual.faces
                       if d in f.corners
                       and all(x in assigned or x == d for x in f.corners))
        lo = min(pressure(d) for d in remaining)
        pick = rng.choice(sorted(d for d in remaining if pressure(d) == lo))
        order.append(pick)
        assigned.add(pick)
        remaining.discard(pick)
    return order


def _constraint_on(dual, assign, face, dot):
    """Locus triple forced on `dot` by an otherwise-assigned face.

    For a point dot the locus triple is a line it must lie on; for a line
    dot it is a point it must pass through.  Either way the condition is
    dot-product zero.
    """
    corners = face.corners
    k = corners.index(dot)
    opp = assign[corners[(k + 2) % 4]]
    s1 = assign[corners[(k + 1) % 4]]
    s2 = assign[corners[(k + 3) % 4]]
    pivot = _sym_cross(s1, s2)          # meet/join of the side corners
    if _is_zero_vec(pivot):
        raise SeedingFailed("coincident side corners")
    locus = _sym_cross(opp, pivot)      # join/meet with the opposite corner
    if _is_zero_vec(locus):
        raise SeedingFailed("opposite corner on the side pivot")
    return locus


def _degenerate_in_face(dual, assign, face):
    """True if a completed face uses a degenerate coherence clause
    (repeated corner element or a corner incidence)."""
    c = face.corners
    els = [assign.get(x) for x in c]
    if any(e is None for e in els):
        return False
    sym = any(el.free_symbols for el in els)
    if sym:
        return False        # undecidable now; final validation decides
    for k in (0, 1):
        if _is_zero_vec(_sym_cross(els[k], els[k + 2])):
            return True
    for k in range(4):
        if _sym_dot(els[k], els[(k + 1) % 4]) == 0:
            return True
    return False


def _attempt_seed(dual, rng, bound):
    t = sympy.Symbol("t")
    order = _choose_order(dual, rng)
    # find the first closure dot, then mark the latest earlier dot that
    # still has a free parameter as the symbolic one
    assigned = set()
    closure_at = None
    nconstraints = {}
    for idx, d in enumerate(order):
        cnt = sum(1 for f in dual.faces
                  if d in f.corners
                  and all(x in assigned or x == d for x in f.corners))
        nconstraints[d] = cnt
        assigned.add(d)
        if cnt >= 3 and closure_at is None:
            closure_at = idx
    symbolic_dot = None
    if closure_at is not None:
        for idx in range(closure_at - 1, -1, -1):
            if nconstraints[order[idx]] <= 1:
                symbolic_dot = order[idx]
                break
        if symbolic_dot is None:
            raise SeedingFailed("no free parameter before first closure")

    assign = {}
    residuals = []
    assigned = set()
    for d in order:
        faces = [f for f in dual.faces
                 if d in f.corners
                 and all(x in assigned or x == d for x in f.corners)]
        loci = [_constraint_on(dual, assign, f, d) for f in faces]
        # deduplicate projectively equal loci
        uniq = []
        for locus in loci:
            if all(not _is_zero_vec(_sym_cross(locus, u)) for u in uniq):
                uniq.append(locus)
        if len(uniq) >= 2:
            el = _sym_cross(uniq[0], uniq[1])
            if _is_zero_vec(el):
                raise SeedingFailed("forced element degenerated")
            for extra in uniq[2:]:
                residuals.append(_sym_dot(el, extra))
            assign[d] = el
            if any(_degenerate_in_face(dual, assign, f) for f in faces):
                raise SeedingFailed("forced element hit a degenerate clause")
        else:
            # free or one-parameter choice: redraw until non-degenerate
            for _ in range(24):
                if len(uniq) == 0:
                    if d == symbolic_dot:
                        raise SeedingFailed("symbolic dot unconstrained")
                    el = _rand_vec(rng, bound)
                else:
                    p0, p1 = _span_of(uniq[0])
                    lam = t if d == symbolic_dot else sympy.Integer(
                        rng.randint(-bound, bound))
                    el = p0 + lam * p1
                assign[d] = el
                if not any(_degenerate_in_face(dual, assign, f)
                           for f in faces):
                    break
                if d == symbolic_dot:
                    break
            else:
                raise SeedingFailed("could not avoid degenerate clause")
        assigned.add(d)

    # solve residual closure equations for the symbolic parameter
    residuals = [sympy.expand(r) for r in residuals]
    nontrivial = [r for r in residuals if r != 0]
    if nontrivial:
        if symbolic_dot is None or all(t not in r.free_symbols
                                       for r in nontrivial):
            raise SeedingFailed("closure equations without a free parameter")
        first = next(r for r in nontrivial if t in r.free_symbols)
        roots = sympy.roots(sympy.Poly(first, t))
        candidates = [r for r in roots if r.is_rational]
        rng.shuffle(candidates)
        candidates = [c for c in candidates
                      if all(sympy.expand(r.subs(t, c)) == 0
                             for r in nontrivial)]
        if not candidates:
            raise SeedingFailed("no rational closure solution")
    else:
        candidates = [None]

    last = None
    for sol in candidates:
        try:
            return _finalize_seed(dual, assign, t, sol)
        except SeedingFailed as exc:
            last = exc
    raise SeedingFailed(str(last))


def _finalize_seed(dual, assign, t, sol):
    out = {}
    for d, el in assign.items():
        if sol is not None:
            el = el.subs(t, sol)
        vals = [sympy.nsimplify(x) for x in el]
        if any(not v.is_rational for v in vals) or all(v == 0 for v in vals):
            raise SeedingFailed("non-rational or zero element")
        triple = tuple(Fraction(int(v.p), int(v.q)) for v in
                       (sympy.Rational(v) for v in vals))
        cls = ProjPoint if dual.colors[d] == BLACK else ProjLine
        out[d] = cls(triple)

    config = Configuration(dual, out)
    report = validate_configuration(config)
    if not report.ok:
        raise SeedingFailed(f"validation failed: {report.failures}")
    for face in dual.faces:
        tile = config.tile_of_face(face)
        if tile.a == tile.b or tile.ell == tile.m:
            raise SeedingFailed("seed landed on a degenerate coherent tile")
    return config


def seed_configuration(dual: DualGraph, rng, attempts=60, bound=20):
    """Build a coherent configuration on the dual graph, or report failure."""
    last = None
    for _ in range(attempts):
        try:
            return _attempt_seed(dual, rng, bound)
        except SeedingFailed as exc:
            last = exc
    raise SeedingFailed(f"could not seed a coherent configuration: {last}")
