"""Exact rational primitives for the real projective plane.

Points and lines are homogeneous triples of arbitrary-precision integers in
a canonical form (coprime entries, first nonzero entry positive), so that
projective equality is plain tuple equality.  Every predicate is exact:
there is no tolerance parameter anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import CoincidentLines, CoincidentPoints, ZeroVector

Triple = tuple[int, int, int]


def _canonical(raw) -> Triple:
    fracs = [Fraction(x) for x in raw]
    if len(fracs) != 3:
        raise ValueError("homogeneous triple must have exactly 3 entries")
    if not any(fracs):
        raise ZeroVector("all three homogeneous coordinates are zero")
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = gcd(gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return (ints[0], ints[1], ints[2])


def normalize(raw) -> Triple:
    """Canonical form of a homogeneous rational triple.

    Idempotent, and complete for projective equality: two triples are
    projectively equal iff their canonical forms are identical.
    """
    return _canonical(raw)


@dataclass(frozen=True, order=True)
class ProjPoint:
    coords: Triple

    def __init__(self, coords):
        object.__setattr__(self, "coords", _canonical(coords))

    def dual(self) -> "ProjLine":
        return ProjLine(self.coords)

    def __repr__(self):
        return "ProjPoint(%d:%d:%d)" % self.coords


@dataclass(frozen=True, order=True)
class ProjLine:
    coeffs: Triple

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", _canonical(coeffs))

    def dual(self) -> ProjPoint:
        return ProjPoint(self.coeffs)

    def __repr__(self):
        return "ProjLine[%d,%d,%d]" % self.coeffs


def _cross(a: Triple, b: Triple) -> Triple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a: Triple, b: Triple) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _det3(a: Triple, b: Triple, c: Triple) -> int:
    return _dot(a, _cross(b, c))


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The line through two distinct points."""
    if p == q:
        raise CoincidentPoints(f"cannot join {p} with itself")
    return ProjLine(_cross(p.coords, q.coords))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The intersection point of two distinct lines."""
    if l == m:
        raise CoincidentLines(f"cannot meet {l} with itself")
    return ProjPoint(_cross(l.coeffs, m.coeffs))


def incident(p: ProjPoint, l: ProjLine) -> bool:
    return _dot(p.coords, l.coeffs) == 0


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return _det3(p.coords, q.coords, r.coords) == 0


def concurrent(l: ProjLine, m: ProjLine, n: ProjLine) -> bool:
    return _det3(l.coeffs, m.coeffs, n.coeffs) == 0
