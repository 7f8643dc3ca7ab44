"""Euclidean structure of the maximal cusp torus, slope lengths and filling certificates.

The cusp torus is tiled by the vertex-link triangles at the ideal vertices,
one per tetrahedron.  Each triangle is the base triangle ABD of the
half-space realization seen at the height R' of the maximal horoball, so
its sides are |AD|/R', |BD|/R' and |AB|/R'.  Walking the gluings develops
the tiling into the plane; the holonomy of every loop must be a
translation, and the translations form the lattice of the torus.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections import deque
from dataclasses import dataclass, field

from . import kernels
from .errors import DevelopingError, DomainError, InvariantViolation
from .geometry import AngleData, realize_half_space
from .triangulation import perm_sign

HOLONOMY_TOL = 1e-9
SIX = 6.0

CITATIONS = (
    "6-theorem: fillings along slopes longer than 6 on a horospherical torus are irreducible, "
    "atoroidal and word-hyperbolic",
    "doubling along the geodesic boundary upgrades the 6-theorem conclusion to hyperbolicity "
    "with geodesic boundary",
)
ASSUMPTIONS = (
    "the edge slope of the cusp tiling is identified with the meridian of the knot component",
    "Heegaard genus g+1 of non-meridian fillings is cited metadata, not computed",
)


def edge_slope_length(a: AngleData) -> float:
    """Closed form for the length of the edge slope on the maximal cusp."""
    c2 = math.cos(a.alpha) ** 2
    return 2 * math.cos(a.alpha) * math.sqrt((4 * c2 - 1) / (4 * c2 * c2 - 1))


def cusp_area(a: AngleData) -> float:
    c2 = math.cos(a.alpha) ** 2
    return (2 * a.g + 2) * (4 * c2 - 1) ** 1.5 / (4 * c2 * c2 - 1)


def cusp_area_from_triangles(a: AngleData) -> float:
    ell = edge_slope_length(a)
    return (2 * a.g + 2) * ell * ell * math.sin(a.delta) / 2


def _cross(u: complex, v: complex) -> float:
    return u.real * v.imag - u.imag * v.real


def _signed_area(p, q, r):
    return 0.5 * _cross(q - p, r - p)


@dataclass(frozen=True)
class Slope:
    """Unoriented slope ``p * meridian + q * second`` in the cusp lattice basis."""

    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise DomainError("(0, 0) is not a slope")
        if math.gcd(self.p, self.q) != 1:
            raise DomainError(f"slope coefficients ({self.p}, {self.q}) are not coprime")

    def canonical(self) -> "Slope":
        if self.p < 0 or (self.p == 0 and self.q < 0):
            return Slope(-self.p, -self.q)
        return self

    def distance(self, other: "Slope") -> int:
        return abs(self.p * other.q - self.q * other.p)


MERIDIAN = Slope(1, 0)
SECOND = Slope(0, 1)


@dataclass(frozen=True)
class CuspTorus:
    g: int
    triangle: tuple  # side lengths (|AD|, |BD|, |AB|) / R'
    triangle_angles: tuple  # (gamma, gamma, delta) at (A, B, D)
    meridian: complex  # edge slope vector, length ell_g
    second: complex  # transversal slope vector
    area: float  # sum of developed triangle areas
    corners: tuple  # developed corner positions per tetrahedron: ((slot, z), ...)
    holonomies: tuple  # translation parts of all side gluings
    max_rotation_residual: float
    max_loop_residual: float

    @property
    def edge_length(self) -> float:
        return abs(self.meridian)

    @property
    def lattice_det(self) -> float:
        return abs(_cross(self.meridian, self.second))

    @property
    def theta(self) -> float:
        """Angle between the meridian and second basis vectors."""
        m, l = self.meridian, self.second
        c = (m.real * l.real + m.imag * l.imag) / (abs(m) * abs(l))
        return math.acos(max(-1.0, min(1.0, c)))

    def gram(self):
        m, l = self.meridian, self.second
        return abs(m) ** 2, m.real * l.real + m.imag * l.imag, abs(l) ** 2

    def vector(self, s: Slope) -> complex:
        return s.p * self.meridian + s.q * self.second


def _reference_triangles(T, a: AngleData):
    """Corner positions of each cusp triangle in its own frame, oriented consistently."""
    from .triangulation import orientation

    h = realize_half_space(a, 1.0)
    scale = 1.0 / h.Rprime
    A, B, D = (complex(*pt) * scale for pt in (h.A, h.B, h.D))
    signs = orientation(T)
    out = []
    for t in range(T.num_tets):
        v = T.ideal_slot(t)
        d = 5 - v  # the other equatorial slot sits at the delta corner
        pos = {0: A, 1: B, d: D}
        x, y, z = sorted(pos)
        want_ccw = perm_sign((v, x, y, z)) * signs[t] > 0
        if (_signed_area(pos[x], pos[y], pos[z]) > 0) != want_ccw:
            pos = {0: B, 1: A, d: D}
        out.append(pos)
    return out, h


def _side_map(pos_from, pos_to, x_from, y_from, x_to, y_to):
    """Similarity ``z -> a z + b`` taking to-frame corners onto from-frame corners."""
    a = (pos_from[x_from] - pos_from[y_from]) / (pos_to[x_to] - pos_to[y_to])
    b = pos_from[x_from] - a * pos_to[x_to]
    return a, b


def build_cusp_torus(T, a: AngleData) -> CuspTorus:
    if T.g != a.g:
        raise DomainError(f"triangulation is for g={T.g} but angles for g={a.g}")
    ref, h = _reference_triangles(T, a)
    n = T.num_tets
    ideal = [T.ideal_slot(t) for t in range(n)]
    tol = HOLONOMY_TOL * max(1.0, abs(ref[0][0]))

    # develop along a spanning tree
    frames = [None] * n
    frames[0] = (1 + 0j, 0j)
    queue = deque([0])
    holonomies = []
    max_rot = 0.0
    while queue:
        t = queue.popleft()
        at, bt = frames[t]
        dev = {s: at * z + bt for s, z in ref[t].items()}
        for zslot in ref[t]:
            x, y = (s for s in ref[t] if s != zslot)
            t2, sig = T.gluings[t][zslot]
            if sig[ideal[t]] != ideal[t2]:
                raise DevelopingError("gluing does not match ideal vertices", (t, zslot))
            a2, b2 = _side_map(dev, ref[t2], x, y, sig[x], sig[y])
            if abs(abs(a2) - 1.0) > HOLONOMY_TOL:
                raise DevelopingError("glued cusp edges have different lengths", (t, zslot, abs(a2)))
            # the neighbour must land on the far side of the shared edge
            near = _cross(dev[y] - dev[x], dev[zslot] - dev[x])
            far = _cross(dev[y] - dev[x], a2 * ref[t2][sig[zslot]] + b2 - dev[x])
            if near * far >= 0:
                raise DevelopingError("developed triangles overlap across an edge", (t, zslot))
            if frames[t2] is None:
                frames[t2] = (a2, b2)
                queue.append(t2)
            else:
                a_old, b_old = frames[t2]
                rot = abs(math.atan2((a2 / a_old).imag, (a2 / a_old).real))
                max_rot = max(max_rot, rot)
                if rot > HOLONOMY_TOL:
                    raise DevelopingError("holonomy is not a translation", (t, zslot, rot))
                holonomies.append(b2 - b_old)

    developed = [{s: frames[t][0] * z + frames[t][1] for s, z in ref[t].items()} for t in range(n)]
    max_loop = _vertex_loop_residual(T, ref, ideal)
    if max_loop > tol:
        raise DevelopingError("holonomy around a cusp vertex is not the identity", max_loop)

    def vertex_class(t, s):
        return T.edge_class_of(t, ideal[t], s).id

    # edge slope: the side whose two ends are the same tiling vertex
    loop_vectors = []
    transversal = {}
    for t in range(n):
        d = 5 - ideal[t]
        gx = [s for s in (0, 1) if vertex_class(t, s) == vertex_class(t, d)]
        if len(gx) != 1:
            raise DevelopingError("expected exactly one loop edge per cusp triangle", t)
        (xs,) = gx
        ys = 1 - xs
        loop_vectors.append(developed[t][xs] - developed[t][d])
        # transversal side D-Y lies on the face opposite X
        t2, sig = T.gluings[t][xs]
        key = min((t, xs), (t2, sig[xs]))
        transversal.setdefault(key, (vertex_class(t, d), vertex_class(t, ys),
                                     developed[t][ys] - developed[t][d], t))
    meridian = loop_vectors[0]
    for vec in loop_vectors:
        if min(abs(vec - meridian), abs(vec + meridian)) > tol:
            raise DevelopingError("loop edges of the cusp tiling are not parallel translates", vec)

    second = _walk_transversal_cycle(transversal, T.g + 1, tol)
    if _dot(meridian, second) < 0:
        second = -second

    area = math.fsum(abs(_signed_area(*developed[t].values())) for t in range(n))
    det = abs(_cross(meridian, second))
    if abs(det - area) > tol * area:
        raise DevelopingError("basis does not span a fundamental domain", (det, area))
    for tau in holonomies:
        x = _cross(tau, second) / _cross(meridian, second)
        y = _cross(meridian, tau) / _cross(meridian, second)
        if abs(x - round(x)) > 1e-7 or abs(y - round(y)) > 1e-7:
            raise DevelopingError("holonomy outside the lattice spanned by the basis", tau)

    side = (abs(ref[0][0] - ref[0][5 - ideal[0]]), abs(ref[0][1] - ref[0][5 - ideal[0]]),
            abs(ref[0][0] - ref[0][1]))
    return CuspTorus(
        g=T.g,
        triangle=side,
        triangle_angles=(a.gamma, a.gamma, a.delta),
        meridian=meridian,
        second=second,
        area=area,
        corners=tuple(tuple(sorted(d.items())) for d in developed),
        holonomies=tuple(holonomies),
        max_rotation_residual=max_rot,
        max_loop_residual=max_loop,
    )


def _dot(u: complex, v: complex) -> float:
    return u.real * v.real + u.imag * v.imag


def _walk_transversal_cycle(edges, expected_len, tol):
    """Sum the transversal edge vectors around the closed path they form."""
    adj = {}
    for eid, (u, v, vec, _) in edges.items():
        adj.setdefault(u, []).append((eid, v, vec))
        adj.setdefault(v, []).append((eid, u, -vec))
    if len(edges) != expected_len or any(len(x) != 2 for x in adj.values()):
        raise DevelopingError("transversal edges do not form a cycle", sorted(adj))
    start_id = min(edges, key=lambda k: edges[k][3])
    start, here, total, _ = edges[start_id]
    total_vec = edges[start_id][2]
    used = {start_id}
    steps = 1
    while here != start:
        eid, nxt, vec = next(e for e in adj[here] if e[0] not in used)
        used.add(eid)
        total_vec += vec
        here = nxt
        steps += 1
    if steps != expected_len:
        raise DevelopingError("transversal path closes up early", steps)
    ref_vec = edges[start_id][2]
    for eid, (_, _, vec, _) in edges.items():
        if min(abs(vec - ref_vec), abs(vec + ref_vec)) > tol:
            raise DevelopingError("transversal edges are not translates", vec)
    return total_vec


def _vertex_loop_residual(T, ref, ideal):
    """Largest deviation from the identity of the holonomy around each cusp vertex."""
    worst = 0.0
    seen = set()
    for t0 in range(T.num_tets):
        for x0 in ref[t0]:
            if (t0, x0) in seen:
                continue
            e0 = next(s for s in ref[t0] if s != x0)
            state = (t0, x0, e0)
            ha, hb = 1 + 0j, 0j
            for _ in range(4 * T.num_tets + 4):
                t, x, e = state
                seen.add((t, x))
                (w,) = [s for s in ref[t] if s not in (x, e)]
                t2, sig = T.gluings[t][e]
                a, b = _side_map(ref[t], ref[t2], x, w, sig[x], sig[w])
                ha, hb = ha * a, ha * b + hb
                state = (t2, sig[x], sig[w])
                if state == (t0, x0, e0):
                    break
            else:
                raise DevelopingError("walk around a cusp vertex did not close", (t0, x0))
            worst = max(worst, abs(ha - 1), abs(hb))
    return worst


# -- slope lengths and filling certificates ----------------------------------

def slope_length(ct: CuspTorus, s: Slope) -> float:
    return abs(ct.vector(s))


def length_lower_bound(a: AngleData, distance: int) -> float:
    """Delta * A_g / ell_g, from area = L(s) L(edge) sin(theta)."""
    return distance * cusp_area(a) / edge_slope_length(a)


@dataclass(frozen=True)
class FillingCertificate:
    g: int
    slope: Slope
    length: float
    length_sq: float
    distance_to_meridian: int
    verdict: str  # "hyperbolic" | "exceptional-meridian" | "undecided"
    citations: tuple = field(default=CITATIONS)
    assumptions: tuple = field(default=ASSUMPTIONS)

    def to_dict(self):
        return {
            "g": self.g,
            "slope": [self.slope.p, self.slope.q],
            "length": self.length,
            "length_sq": self.length_sq,
            "distance": self.distance_to_meridian,
            "verdict": self.verdict,
            "heegaard_genus_cited": self.g + 1 if self.verdict == "hyperbolic" else None,
            "citations": list(self.citations),
            "assumptions": list(self.assumptions),
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), sort_keys=True, **kwargs)


def _verdict(slope: Slope, length_sq: float) -> str:
    if slope == MERIDIAN:
        return "exceptional-meridian"
    if length_sq > SIX * SIX:
        return "hyperbolic"
    return "undecided"


def certify_filling(ct: CuspTorus, s: Slope, strict: bool = True) -> FillingCertificate:
    s = s.canonical()
    vec = ct.vector(s)
    len_sq = vec.real ** 2 + vec.imag ** 2
    verdict = _verdict(s, len_sq)
    cert = FillingCertificate(ct.g, s, math.sqrt(len_sq), len_sq, s.distance(MERIDIAN), verdict)
    if strict and verdict == "undecided":
        raise InvariantViolation(f"slope {s} is not the meridian but has length <= 6", cert)
    return cert


@dataclass(frozen=True)
class SlopeAudit:
    g: int
    bound: int
    count: int
    short_slopes: tuple  # ((p, q, length_sq), ...) with length <= 6
    min_nonmeridian_len_sq: float
    min_distance_one_len_sq: float
    lower_bound_violations: int
    uncovered_by_case_split: int
    residual_case_slopes: int  # distance 1 with (g+1) < 6

    @property
    def only_meridian_short(self) -> bool:
        return [(p, q) for p, q, _ in self.short_slopes] == [(1, 0)]

    @property
    def ok(self) -> bool:
        return (self.only_meridian_short and self.min_nonmeridian_len_sq > SIX * SIX
                and self.lower_bound_violations == 0 and self.uncovered_by_case_split == 0)

    def to_dict(self):
        return {
            "g": self.g,
            "bound": self.bound,
            "count": self.count,
            "short_slopes": [list(x) for x in self.short_slopes],
            "min_nonmeridian_len_sq": self.min_nonmeridian_len_sq,
            "min_distance_one_len_sq": self.min_distance_one_len_sq,
            "lower_bound_violations": self.lower_bound_violations,
            "uncovered_by_case_split": self.uncovered_by_case_split,
            "residual_case_slopes": self.residual_case_slopes,
            "ok": self.ok,
        }


def slope_sweep(ct: CuspTorus, coeff_bound: int):
    """Arrays ``(p, q, length_sq)`` for all canonical coprime slopes in the box."""
    if coeff_bound < 1:
        raise DomainError(f"coefficient bound must be >= 1, got {coeff_bound}")
    m2, ml, l2 = ct.gram()
    return kernels.slope_table(int(coeff_bound), m2, ml, l2)


def exhaustive_slope_audit(ct: CuspTorus, coeff_bound: int, a: AngleData | None = None) -> SlopeAudit:
    from .geometry import angles

    a = a or angles(ct.g)
    ps, qs, len2 = slope_sweep(ct, coeff_bound)
    dist = abs(qs)
    short = sorted((int(p), int(q), float(l)) for p, q, l in zip(ps, qs, len2) if l <= SIX * SIX)
    nonmer = dist >= 1
    bound = dist * (cusp_area(a) / edge_slope_length(a))
    violations = int(((len2 < bound * bound * (1 - 1e-12)) & nonmer).sum())
    g = ct.g
    covered = ((g + 1) * dist >= 6) | ((dist == 1) & (2 <= g) & (g <= 5))
    residual = int(((dist == 1) & ((g + 1) < 6)).sum())
    d1 = dist == 1
    return SlopeAudit(
        g=g,
        bound=coeff_bound,
        count=int(len(ps)),
        short_slopes=tuple(short),
        min_nonmeridian_len_sq=float(len2[nonmer].min()),
        min_distance_one_len_sq=float(len2[d1].min()),
        lower_bound_violations=violations,
        uncovered_by_case_split=int((nonmer & ~covered).sum()),
        residual_case_slopes=residual,
    )


SWEEP_CSV_COLUMNS = ("p", "q", "delta", "length_sq", "verdict")


def sweep_csv(ct: CuspTorus, coeff_bound: int) -> str:
    ps, qs, len2 = slope_sweep(ct, coeff_bound)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_CSV_COLUMNS)
    for p, q, l in zip(ps.tolist(), qs.tolist(), len2.tolist()):
        w.writerow([p, q, abs(q), repr(l), _verdict(Slope(p, q), l)])
    return buf.getvalue()
