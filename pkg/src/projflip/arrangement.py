"""Cell complex of the projective plane induced by n generic lines.

The complex is traced on the orientable double cover: every projective line
lifts to a great circle on the 2-sphere, intersections lift to antipodal
vertex pairs, and faces are traced from an exact rotation system (all cyclic
orderings are sign-of-determinant tests on integer vectors, no trigonometry).
Antipodal orbits are then merged into the projective-plane cells.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from itertools import combinations

from .errors import NotBipartite, NotGeneric, TooFewLines
from .projective import ProjLine, ProjPoint, _cross, _dot

BLACK = "B"
WHITE = "W"


# -- genericity -----------------------------------------------------------

@dataclass(frozen=True)
class GenericityReport:
    coincident_pairs: tuple
    concurrent_triples: tuple

    @property
    def is_generic(self) -> bool:
        return not self.coincident_pairs and not self.concurrent_triples


def check_generic(lines) -> GenericityReport:
    """Report all coincident pairs and concurrent triples among the lines."""
    if len(lines) < 2:
        raise TooFewLines("need at least 2 lines")
    pairs = tuple(
        (i, j) for i, j in combinations(range(len(lines)), 2)
        if lines[i] == lines[j]
    )
    triples = ()
    if not pairs:
        from .projective import concurrent
        triples = tuple(
            (i, j, k) for i, j, k in combinations(range(len(lines)), 3)
            if concurrent(lines[i], lines[j], lines[k])
        )
    return GenericityReport(pairs, triples)


# -- exact angular order --------------------------------------------------

def _half(v) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ccw_cmp(a, b) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    cross = a[0] * b[1] - a[1] * b[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def ccw_sorted(items, key):
    """Sort items by the counterclockwise angle of their 2-vector key."""
    return sorted(items, key=functools.cmp_to_key(
        lambda p, q: _ccw_cmp(key(p), key(q))))


def _perp(v):
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        u = _cross(v, e)
        if any(u):
            return u
    raise AssertionError("zero vector has no perpendicular")


def _plane_coords(v, basis_u, basis_w):
    return (_dot(v, basis_u), _dot(v, basis_w))


# -- arrangement data -----------------------------------------------------

@dataclass(frozen=True)
class Vertex:
    id: int
    pair: tuple          # indices {i, j} of the defining lines, i < j
    point: ProjPoint


@dataclass(frozen=True)
class Arc:
    id: int
    line: int            # index of the carrying line
    ends: tuple          # (vertex id, vertex id); equal ids possible for n=2


@dataclass(frozen=True)
class Region:
    id: int
    boundary: tuple      # arc ids in boundary-walk order
    signature: tuple     # sorted (line, vertex-pair, vertex-pair) per arc
    signs: tuple = ()    # side of each line, for one of the two lifted cones

    @property
    def size(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class Arrangement:
    lines: tuple
    vertices: tuple
    arcs: tuple
    regions: tuple
    arc_regions: tuple       # per arc id: (region id, region id)
    vertex_corners: tuple    # per vertex id: 4 region ids in cyclic order

    @property
    def n(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class Coloring:
    colors: tuple        # BLACK / WHITE per region id
    base_region: int


@dataclass(frozen=True)
class DualFace:
    corners: tuple       # 4 dot ids in cyclic order
    label: tuple | None = None   # line-index pair for arrangement duals


@dataclass(frozen=True)
class DualGraph:
    colors: dict         # dot id -> BLACK/WHITE
    edges: tuple         # (dot id, dot id) with multiplicity
    faces: tuple         # DualFace

    @staticmethod
    def from_faces(colors, faces, edges=None):
        faces = tuple(
            f if isinstance(f, DualFace) else DualFace(tuple(f)) for f in faces
        )
        if edges is None:
            counts = {}
            for f in faces:
                c = f.corners
                for k in range(4):
                    side = frozenset((c[k], c[(k + 1) % 4]))
                    counts[side] = counts.get(side, 0) + 1
            built = []
            for side, cnt in sorted(counts.items(), key=lambda kv: sorted(kv[0])):
                a, b = sorted(side)
                built.extend([(a, b)] * -(-cnt // 2))
            edges = tuple(built)
        return DualGraph(dict(colors), tuple(edges), faces)

    def dot_faces(self, dot):
        return [f for f in self.faces if dot in f.corners]


# -- sphere construction --------------------------------------------------

class _SphereMap:
    """Great-circle arrangement on S^2 with an exact rotation system.

    Sphere vertices are keyed by (pair, sign): the canonical cross-product
    direction of the pair's lines, or its negation.  Darts are
    (circle, slot, direction) with direction +1 running counterclockwise
    around the circle's normal.
    """

    def __init__(self, lines):
        self.lines = lines
        n = len(lines)
        self.pairs = list(combinations(range(n), 2))
        self.vec = {}
        for pair in self.pairs:
            i, j = pair
            v = ProjPoint(_cross(lines[i].coeffs, lines[j].coeffs)).coords
            self.vec[(pair, 1)] = v
            self.vec[(pair, -1)] = tuple(-x for x in v)
        # cyclic order of lift points along each circle
        self.circle = []
        for i in range(n):
            normal = lines[i].coeffs
            u = _perp(normal)
            w = _cross(normal, u)
            pts = [(tuple(sorted((i, j))), s) for j in range(n) if j != i
                   for s in (1, -1)]
            pts = ccw_sorted(
                pts, key=lambda p: _plane_coords(self.vec[p], u, w))
            self.circle.append(pts)
        self._build_rotations()
        self._trace_faces()

    # dart helpers
    def origin(self, dart):
        i, k, d = dart
        ring = self.circle[i]
        return ring[k] if d == 1 else ring[(k + 1) % len(ring)]

    def head(self, dart):
        return self.origin(self.twin(dart))

    @staticmethod
    def twin(dart):
        i, k, d = dart
        return (i, k, -d)

    def tangent(self, dart):
        i, _, d = dart
        t = _cross(self.lines[i].coeffs, self.vec[self.origin(dart)])
        return t if d == 1 else tuple(-x for x in t)

    def antipode_vertex(self, v):
        pair, s = v
        return (pair, -s)

    def antipode_dart(self, dart):
        i, k, d = dart
        ring = self.circle[i]
        src = self.origin(dart)
        dst = self.head(dart)
        asrc = self.antipode_vertex(src)
        adst = self.antipode_vertex(dst)
        ak = ring.index(asrc if d == 1 else adst)
        return (i, ak, d)

    def _build_rotations(self):
        out = {}
        for i, ring in enumerate(self.circle):
            for k in range(len(ring)):
                out.setdefault(ring[k], []).append((i, k, 1))
                out.setdefault(ring[(k + 1) % len(ring)], []).append((i, k, -1))
        self.rotation = {}
        for v, darts in out.items():
            normal = self.vec[v]
            u = _perp(normal)
            w = _cross(normal, u)
            self.rotation[v] = ccw_sorted(
                darts, key=lambda d: _plane_coords(self.tangent(d), u, w))

    def _rot_step(self, dart, step):
        v = self.origin(dart)
        ring = self.rotation[v]
        return ring[(ring.index(dart) + step) % len(ring)]

    def next_in_face(self, dart):
        # left-face traversal for counterclockwise rotations
        return self._rot_step(self.twin(dart), 1)

    def _trace_faces(self):
        darts = [(i, k, d) for i, ring in enumerate(self.circle)
                 for k in range(len(ring)) for d in (1, -1)]
        seen = set()
        self.faces = []
        self.face_of_dart = {}
        for start in darts:
            if start in seen:
                continue
            cycle = []
            d = start
            while True:
                cycle.append(d)
                seen.add(d)
                self.face_of_dart[d] = len(self.faces)
                d = self.next_in_face(d)
                if d == start:
                    break
            self.faces.append(tuple(cycle))
        v = len(self.rotation)
        e = len(darts) // 2
        f = len(self.faces)
        if v - e + f != 2:
            raise AssertionError(
                f"sphere Euler characteristic broken: V={v} E={e} F={f}")

    def face_signs(self, cycle):
        """Side of every circle for the open cone over a sphere face.

        With this rotation convention the traced face lies in the
        negative hemisphere of each boundary circle run forward; circles
        away from the boundary keep the sign they have at any face
        vertex off them.
        """
        signs = {}
        for i, _, d in cycle:
            signs[i] = -d
        for j in range(len(self.lines)):
            if j in signs:
                continue
            normal = self.lines[j].coeffs
            for dart in cycle:
                s = _dot(normal, self.vec[self.origin(dart)])
                if s:
                    signs[j] = 1 if s > 0 else -1
                    break
            else:
                raise AssertionError(f"face has no vertex off circle {j}")
        return tuple(signs[j] for j in range(len(self.lines)))


def build_arrangement(lines) -> Arrangement:
    """Build the projective cell complex of a generic line collection."""
    lines = tuple(lines)
    report = check_generic(lines)
    if not report.is_generic:
        raise NotGeneric(
            "lines are not generic: "
            f"coincident={report.coincident_pairs} "
            f"concurrent={report.concurrent_triples}",
            report.coincident_pairs, report.concurrent_triples)
    sphere = _SphereMap(lines)

    vertices = tuple(
        Vertex(vid, pair, ProjPoint(sphere.vec[(pair, 1)]))
        for vid, pair in enumerate(sphere.pairs))
    vid_of_pair = {v.pair: v.id for v in vertices}

    # quotient arcs: antipodal orbits of sphere edges
    arc_of_edge = {}
    arcs = []
    for i, ring in enumerate(sphere.circle):
        for k in range(len(ring)):
            edge = (i, k)
            if edge in arc_of_edge:
                continue
            ai, ak, _ = sphere.antipode_dart((i, k, 1))
            aid = len(arcs)
            arc_of_edge[edge] = aid
            arc_of_edge[(ai, ak)] = aid
            src, dst = ring[k], sphere.head((i, k, 1))
            arcs.append(Arc(aid, i, (vid_of_pair[src[0]], vid_of_pair[dst[0]])))
    arcs = tuple(arcs)

    # quotient regions: antipodal orbits of sphere faces
    region_of_face = {}
    face_cycles = []
    for fid, cycle in enumerate(sphere.faces):
        if fid in region_of_face:
            continue
        # the antipodal map reverses orientation, so the left face of a
        # dart folds onto the left face of the twin of its antipodal dart
        ad = sphere.twin(sphere.antipode_dart(cycle[0]))
        afid = sphere.face_of_dart[ad]
        if afid == fid:
            raise AssertionError("antipodal map fixed a sphere face")
        rid = len(face_cycles)
        region_of_face[fid] = rid
        region_of_face[afid] = rid
        face_cycles.append(cycle)

    regions = []
    for rid, cycle in enumerate(face_cycles):
        boundary = tuple(arc_of_edge[(d[0], d[1])] for d in cycle)
        sig = tuple(sorted(
            (arcs[a].line,
             vertices[arcs[a].ends[0]].pair, vertices[arcs[a].ends[1]].pair)
            for a in boundary))
        regions.append(Region(rid, boundary, sig, sphere.face_signs(cycle)))
    regions = tuple(regions)

    # arc -> the two bordering regions
    arc_regions = []
    for aid, arc in enumerate(arcs):
        sides = []
        for (edge, a) in arc_of_edge.items():
            if a != aid:
                continue
            i, k = edge
            for d in (1, -1):
                sides.append(region_of_face[sphere.face_of_dart[(i, k, d)]])
        # each arc has two antipodal sphere edges with two sides each;
        # the four sphere sides fold onto two projective sides
        left = region_of_face[sphere.face_of_dart[
            next((i, k, 1) for (i, k), a in arc_of_edge.items() if a == aid)]]
        twin_dart = sphere.twin(
            next((i, k, 1) for (i, k), a in arc_of_edge.items() if a == aid))
        right = region_of_face[sphere.face_of_dart[twin_dart]]
        arc_regions.append((left, right))
    arc_regions = tuple(arc_regions)

    # cyclic corner regions around each vertex (canonical + lift)
    vertex_corners = []
    for v in vertices:
        ring = sphere.rotation[(v.pair, 1)]
        if len(ring) != 4:
            raise AssertionError(f"vertex degree {len(ring)} != 4")
        corners = tuple(
            region_of_face[sphere.face_of_dart[d]] for d in ring)
        vertex_corners.append(corners)
    vertex_corners = tuple(vertex_corners)

    arr = Arrangement(lines, vertices, arcs, regions, arc_regions,
                      vertex_corners)
    _check_counts(arr)
    return arr


def _check_counts(arr):
    n = arr.n
    v, e, f, euler = cell_census(arr)
    expect = (n * (n - 1) // 2, n * (n - 1), n * (n - 1) // 2 + 1, 1)
    if (v, e, f, euler) != expect:
        raise AssertionError(
            f"cell census {(v, e, f, euler)} != expected {expect}")


def cell_census(arr: Arrangement):
    v = len(arr.vertices)
    e = len(arr.arcs)
    f = len(arr.regions)
    return (v, e, f, v - e + f)


def checkerboard_color(arr: Arrangement) -> Coloring:
    """Proper 2-coloring of the region adjacency graph.

    The base region (deterministically the one with the lexicographically
    least boundary signature) is colored black.  Raises NotBipartite when no
    proper coloring exists, which happens exactly for odd n.
    """
    base = min(arr.regions, key=lambda r: r.signature).id
    colors = {base: BLACK}
    queue = [base]
    adj = {r.id: [] for r in arr.regions}
    for left, right in arr.arc_regions:
        adj[left].append(right)
        adj[right].append(left)
    while queue:
        r = queue.pop()
        for s in adj[r]:
            if s not in colors:
                colors[s] = WHITE if colors[r] == BLACK else BLACK
                queue.append(s)
            elif colors[s] == colors[r]:
                raise NotBipartite(
                    f"regions {r} and {s} share an arc but demand one color")
    if len(colors) != len(arr.regions):
        raise AssertionError("region adjacency graph is disconnected")
    return Coloring(tuple(colors[r.id] for r in arr.regions), base)


def dual_quadrangulation(arr: Arrangement, col: Coloring) -> DualGraph:
    """Bipartite quadrangulation dual to the arrangement."""
    colors = {r.id: col.colors[r.id] for r in arr.regions}
    edges = tuple(sorted(tuple(sorted(p)) for p in arr.arc_regions))
    faces = []
    for v in arr.vertices:
        corners = arr.vertex_corners[v.id]
        cs = [colors[c] for c in corners]
        if cs[0] == cs[1] or cs[1] == cs[2] or cs[0] != cs[2]:
            raise AssertionError(f"dual face at {v.pair} does not alternate")
        faces.append(DualFace(corners, v.pair))
    return DualGraph(colors, edges, tuple(faces))


def random_generic_lines(n, rng, bound=50):
    """Draw n pairwise-distinct lines with no concurrent triple.

    Coefficients are small integers from rng; rejection-samples until the
    collection is generic, so the result is deterministic per rng state.
    """
    if n < 2:
        raise TooFewLines("need at least 2 lines")
    while True:
        lines = []
        while len(lines) < n:
            triple = tuple(rng.randint(-bound, bound) for _ in range(3))
            if not any(triple):
                continue
            lines.append(ProjLine(triple))
        if check_generic(lines).is_generic:
            return lines


def triangular_regions(arr: Arrangement):
    """Regions bounded by exactly 3 arcs: the geometric flip sites."""
    return [r.id for r in arr.regions if r.size == 3]
