"""Exact real root isolation for rational polynomials.

Polynomials are tuples of Fractions in ascending degree order.  Roots in
an interval are located with Sturm sign-variation counts and bisection,
so every bound is an exact rational; a root is reported either as an
exact Fraction (when bisection lands on it) or as a shrinking isolating
interval that can be refined on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IdenticallyZero

Poly = tuple  # of Fraction, ascending, no trailing zeros


def poly(coeffs) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    return len(p) - 1


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly([(p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0)
                 for k in range(n)])


def scale(p: Poly, c) -> Poly:
    return poly([x * c for x in p])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def derivative(p: Poly) -> Poly:
    return poly([k * c for k, c in enumerate(p)][1:])


def divmod_poly(p: Poly, q: Poly):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    while len(rem) >= len(q) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(q):
            break
        c = rem[-1] / q[-1]
        k = len(rem) - len(q)
        quo[k] = c
        for j, b in enumerate(q):
            rem[k + j] -= c * b
        rem.pop()
    return poly(quo), poly(rem)


def gcd_poly(p: Poly, q: Poly) -> Poly:
    a, b = p, q
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return ()
    return scale(a, 1 / a[-1])    # monic


def squarefree(p: Poly) -> Poly:
    if degree(p) < 1:
        return p
    g = gcd_poly(p, derivative(p))
    if degree(g) < 1:
        return p
    return divmod_poly(p, g)[0]


def sturm_chain(p: Poly):
    chain = [p, derivative(p)]
    while chain[-1] and degree(chain[-1]) >= 1:
        rem = divmod_poly(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(scale(rem, -1))
    return [q for q in chain if q]


def _variations(chain, x: Fraction) -> int:
    signs = []
    for q in chain:
        v = evaluate(q, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, a: Fraction, b: Fraction) -> int:
    """Distinct real roots of squarefree p in the half-open (a, b]."""
    chain = sturm_chain(p)
    return _variations(chain, a) - _variations(chain, b)


@dataclass
class RealRoot:
    """A single real root of a squarefree rational polynomial.

    Invariant: either `exact` is set, or the open interval (lo, hi)
    contains exactly one root of `poly` and the endpoints are not roots.
    """
    poly: Poly
    lo: Fraction
    hi: Fraction
    exact: Fraction | None = field(default=None)

    def __post_init__(self):
        if self.exact is not None:
            self.lo = self.hi = self.exact

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self):
        """Halve the isolating interval (no-op once exact)."""
        if self.exact is not None:
            return
        mid = (self.lo + self.hi) / 2
        v = evaluate(self.poly, mid)
        if v == 0:
            self.exact = mid
            self.lo = self.hi = mid
            return
        lo_sign = evaluate(self.poly, self.lo) > 0
        if (v > 0) == lo_sign:
            self.lo = mid
        else:
            self.hi = mid

    def refine_below(self, width: Fraction):
        while self.exact is None and self.width > width:
            self.refine()


def isolate_roots(p: Poly, a: Fraction, b: Fraction):
    """All real roots of p strictly inside (a, b), in increasing order.

    Requires p nonzero at both endpoints; a polynomial that vanishes
    identically is rejected.
    """
    if not p:
        raise IdenticallyZero("cannot isolate roots of the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if evaluate(p, a) == 0 or evaluate(p, b) == 0:
        raise ValueError("endpoint is a root; shrink the interval first")
    sf = squarefree(p)
    if degree(sf) < 1:
        return []

    def count_open(lo, hi):
        # (a, b] count, with a rational root sitting exactly on hi
        # (an already-reported bisection midpoint) excluded
        n = count_roots(sf, lo, hi)
        return n - 1 if evaluate(sf, hi) == 0 else n

    out = []
    stack = [(a, b, count_open(a, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and evaluate(sf, lo) * evaluate(sf, hi) < 0:
            out.append(RealRoot(sf, lo, hi))
            continue
        mid = (lo + hi) / 2
        if evaluate(sf, mid) == 0:
            out.append(RealRoot(sf, mid, mid, exact=mid))
        stack.append((lo, mid, count_open(lo, mid)))
        stack.append((mid, hi, count_open(mid, hi)))
    out.sort(key=lambda r: (r.lo, r.hi))
    return out


def compare_roots(r1: RealRoot, r2: RealRoot) -> int:
    """-1, 0 or 1 as the real numbers compare; exact, always terminates."""
    if r1.exact is not None and r2.exact is not None:
        return (r1.exact > r2.exact) - (r1.exact < r2.exact)
    if r1.exact is not None or r2.exact is not None:
        pt, other = (r1, r2) if r1.exact is not None else (r2, r1)
        x = pt.exact
        if other.lo < x < other.hi and evaluate(other.poly, x) == 0:
            return 0
        while other.lo < x < other.hi:
            other.refine()
            if other.exact is not None:
                return compare_roots(r1, r2)
        if other.exact is not None:
            return compare_roots(r1, r2)
        cmp = -1 if x <= other.lo else 1
        return cmp if pt is r1 else -cmp
    g = gcd_poly(r1.poly, r2.poly)
    if degree(g) >= 1:
        lo, hi = max(r1.lo, r2.lo), min(r1.hi, r2.hi)
        if lo < hi and count_roots(g, lo, hi) > 0:
            return 0
    while True:
        if r1.hi <= r2.lo:
            return -1
        if r2.hi <= r1.lo:
            return 1
        r1.refine()
        r2.refine()
        if r1.exact is not None or r2.exact is not None:
            return compare_roots(r1, r2)
