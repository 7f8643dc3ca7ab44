"""Dihedral angles of the tetrahedra of T_g and their upper half-space realization."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import DomainError, InvariantViolation

IDENTITY_TOL = 1e-12
GEOMETRY_TOL = 1e-9


@dataclass(frozen=True)
class AngleData:
    """The four dihedral angles (radians) shared by every tetrahedron of T_g."""

    g: int
    alpha: float
    beta: float
    gamma: float
    delta: float

    def perturbed(self, **shifts) -> "AngleData":
        """Copy with some angles shifted; no invariants are enforced."""
        return replace(self, **{k: getattr(self, k) + v for k, v in shifts.items()})

    def residuals(self) -> dict:
        a, b, c, d = self.alpha, self.beta, self.gamma, self.delta
        return {
            "alpha": a - math.pi / (2 * self.g + 2),
            "beta": b - 2 * a,
            "gamma": math.cos(c) * 2 * math.cos(a) - 1.0,
            "delta": d + 2 * c - math.pi,
            "double_angle": 2 * math.cos(a) ** 2 - 1 - math.cos(b),
        }

    def validate(self, tol: float = IDENTITY_TOL) -> "AngleData":
        for name in ("alpha", "beta", "gamma", "delta"):
            x = getattr(self, name)
            if not 0.0 < x < math.pi:
                raise InvariantViolation(f"{name}={x} outside (0, pi)")
        bad = {k: v for k, v in self.residuals().items() if abs(v) > tol}
        if bad:
            raise InvariantViolation("angle identities violated", bad)
        return self


def angles(g: int) -> AngleData:
    if not isinstance(g, int) or g < 2:
        raise DomainError(f"angles are defined for integer g >= 2, got {g!r}")
    alpha = math.pi / (2 * g + 2)
    gamma = math.acos(1.0 / (2.0 * math.cos(alpha)))
    return AngleData(g, alpha, 2 * alpha, gamma, math.pi - 2 * gamma).validate()


def check_consistency(a: AngleData) -> float:
    """LHS - RHS of the edge-matching equation; zero when AB and CD agree in length."""
    ca, cb, cc, cd = (math.cos(x) for x in (a.alpha, a.beta, a.gamma, a.delta))
    sa, sc, sd = math.sin(a.alpha), math.sin(a.gamma), math.sin(a.delta)
    lhs = (cc * ca + cb) / (sc * sa)
    rhs = (cd * ca + ca) / (sd * sa)
    return lhs - rhs


# -- dihedral angles on the triangulation -----------------------------------

@dataclass(frozen=True)
class TetShape:
    """Dihedral angle on each edge (slot pair) of one tetrahedron of T_g."""

    tet: int
    ideal_vertex: int
    dihedral: tuple  # ((a, b), angle) with a < b, six entries

    def angle(self, a, b):
        key = (min(a, b), max(a, b))
        return dict(self.dihedral)[key]


def tet_shape(T, a: AngleData, tet: int) -> TetShape:
    """Angles of tetrahedron ``tet``: delta on the equatorial edge, beta on v1 v2,
    gamma from the ideal vertex to the apexes and alpha from the other
    equatorial vertex to the apexes."""
    ideal = T.ideal_slot(tet)
    if ideal not in (2, 3):
        raise InvariantViolation(f"ideal vertex of tetrahedron {tet} is not equatorial", ideal)
    other = 5 - ideal
    table = {
        (0, 1): a.beta,
        (2, 3): a.delta,
        tuple(sorted((0, ideal))): a.gamma,
        tuple(sorted((1, ideal))): a.gamma,
        tuple(sorted((0, other))): a.alpha,
        tuple(sorted((1, other))): a.alpha,
    }
    return TetShape(tet, ideal, tuple(sorted(table.items())))


def edge_angle_sums(T, a: AngleData) -> dict:
    """Total dihedral angle around each edge class, summed over its members."""
    shapes = [tet_shape(T, a, t) for t in range(T.num_tets)]
    return {ec.id: math.fsum(shapes[t].angle(*e) for t, e in ec.members) for ec in T.edge_classes}


def cusp_angle_sums(T, a: AngleData) -> list:
    """Angle sum of the cusp-link triangle of each tetrahedron."""
    out = []
    for t in range(T.num_tets):
        sh = tet_shape(T, a, t)
        v = sh.ideal_vertex
        out.append(math.fsum(sh.angle(v, w) for w in range(4) if w != v))
    return out


# -- upper half-space realization -------------------------------------------

@dataclass(frozen=True)
class Circle:
    center: tuple
    radius: float


@dataclass(frozen=True)
class Line:
    point: tuple
    direction: tuple  # unit vector


def _sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def _norm(v):
    return math.hypot(v[0], v[1])


def _dist(p, q):
    return _norm(_sub(p, q))


def _line(p, q):
    d = _sub(q, p)
    n = _norm(d)
    return Line(p, (d[0] / n, d[1] / n))


def line_distance(line: Line, x) -> float:
    """Unsigned distance from point ``x`` to ``line``."""
    v = _sub(x, line.point)
    return abs(v[0] * line.direction[1] - v[1] * line.direction[0])


def _angle_at(vertex, p, q):
    u, v = _sub(p, vertex), _sub(q, vertex)
    c = (u[0] * v[0] + u[1] * v[1]) / (_norm(u) * _norm(v))
    return math.acos(max(-1.0, min(1.0, c)))


def _circle_line(circle, line):
    """Intersections of a circle and a line, ordered along the line direction."""
    v = _sub(line.point, circle.center)
    b = v[0] * line.direction[0] + v[1] * line.direction[1]
    c = v[0] ** 2 + v[1] ** 2 - circle.radius ** 2
    disc = b * b - c
    if disc < 0:
        return ()
    root = math.sqrt(disc)
    return tuple((line.point[0] + t * line.direction[0], line.point[1] + t * line.direction[1])
                 for t in (-b - root, -b + root))


@dataclass(frozen=True)
class HalfSpaceRealization:
    """Traces at infinity of a tetrahedron of T_g with its ideal vertex at infinity.

    ``F1`` carries the face opposite the ideal vertex; the vertical faces
    ``F2, F3, F4`` project to lines and the truncation planes to circles
    ``S2, S3, S4`` centred at ``A = F3 n F4``, ``B = F2 n F4``, ``D = F2 n F3``.
    """

    R: float
    Rprime: float
    F1: Circle
    S2: Circle
    S3: Circle
    S4: Circle
    F2: Line
    F3: Line
    F4: Line
    A: tuple
    B: tuple
    C: tuple
    D: tuple
    V: tuple
    P: tuple
    Q: tuple
    gamma_prime: float

    @property
    def spheres(self):
        """(center, radius) of every hemisphere bounding the solid from below."""
        return [(c.center, c.radius) for c in (self.F1, self.S2, self.S3, self.S4)]

    def residuals(self, a: AngleData) -> dict:
        R, Rp, C = self.R, self.Rprime, self.C
        out = {}
        for name, S in (("S2", self.S2), ("S3", self.S3), ("S4", self.S4)):
            out[f"F1_perp_{name}"] = (_dist(C, S.center) ** 2 - R ** 2 - S.radius ** 2) / R ** 2
            out[f"radius_{name}"] = (S.radius - Rp) / R
        for fname, F in (("F2", self.F2), ("F3", self.F3), ("F4", self.F4)):
            for sname, S in (("S2", self.S2), ("S3", self.S3), ("S4", self.S4)):
                if fname[1] != sname[1]:
                    out[f"{fname}_perp_{sname}"] = line_distance(F, S.center) / R
        out["angle_A"] = _angle_at(self.A, self.B, self.D) - a.gamma
        out["angle_B"] = _angle_at(self.B, self.A, self.D) - a.gamma
        out["angle_D"] = _angle_at(self.D, self.A, self.B) - a.delta
        ad, bd, ab = _dist(self.A, self.D), _dist(self.B, self.D), _dist(self.A, self.B)
        out["AD_eq_BD"] = (ad - bd) / R
        out["AB_eq_2ADcos"] = (ab - 2 * ad * math.cos(a.gamma)) / R
        # dihedral angles between F1 and the vertical faces: cos = dist(C, line) / R
        out["F1_F4_beta"] = line_distance(self.F4, C) / R - math.cos(a.beta)
        out["F1_F3_alpha"] = line_distance(self.F3, C) / R - math.cos(a.alpha)
        out["F1_F2_alpha"] = line_distance(self.F2, C) / R - math.cos(a.alpha)
        out["angle_CAV"] = _angle_at(self.A, C, self.V) - self.gamma_prime
        out["angle_AVC"] = _angle_at(self.V, self.A, C) - (math.pi / 2 + a.beta)
        out["angle_AQC"] = _angle_at(self.Q, self.A, C) - (math.pi / 2 + a.alpha)
        out["Rprime_sq_formula"] = (Rp ** 2 - rprime_squared(a, R)) / R ** 2
        out["AB_formula"] = (ab - ab_length(a, Rp)) / R
        return out

    def max_residual(self, a: AngleData) -> float:
        return max(abs(v) for v in self.residuals(a).values())


def _d2(a: AngleData) -> float:
    ca, cb, cc = math.cos(a.alpha), math.cos(a.beta), math.cos(a.gamma)
    return ca * ca + cb * cb + cc * cc + 2 * ca * cb * cc - 1


def rprime_squared(a: AngleData, R: float = 1.0) -> float:
    """Closed form for the common truncation radius squared."""
    return R * R * _d2(a) / math.sin(a.gamma) ** 2


def ab_length(a: AngleData, Rprime: float) -> float:
    """Closed form for |AB| in terms of the truncation radius."""
    ca, cb, cc = math.cos(a.alpha), math.cos(a.beta), math.cos(a.gamma)
    return 2 * Rprime * (ca + cb * cc) / math.sqrt(_d2(a))


def realize_half_space(a: AngleData, R: float = 1.0) -> HalfSpaceRealization:
    if R <= 0:
        raise DomainError(f"radius must be positive, got {R}")
    ca, cb, cc = math.cos(a.alpha), math.cos(a.beta), math.cos(a.gamma)
    cot_gp = (ca + cb * cc) / (cb * math.sin(a.gamma))
    gp = math.atan2(1.0, cot_gp)
    ac = R * cb / math.sin(gp)
    rp = math.sqrt(ac * ac - R * R)
    ab = 2 * ac * math.cos(gp)
    ad = ab / (2 * cc)
    A = (-ab / 2, 0.0)
    B = (ab / 2, 0.0)
    C = (0.0, ac * math.sin(gp))
    D = (A[0] + ad * math.cos(a.gamma), ad * math.sin(a.gamma))
    F1 = Circle(C, R)
    F2, F3, F4 = _line(B, D), _line(A, D), _line(A, B)
    V = _circle_line(F1, F4)[0]  # nearer A
    Q, P = _circle_line(F1, F3)
    return HalfSpaceRealization(
        R=R, Rprime=rp, F1=F1,
        S2=Circle(A, rp), S3=Circle(B, rp), S4=Circle(D, rp),
        F2=F2, F3=F3, F4=F4, A=A, B=B, C=C, D=D, V=V, P=P, Q=Q, gamma_prime=gp,
    )


def rprime_cubic(a: AngleData) -> float:
    cb = math.cos(a.beta)
    return 2 * cb ** 3 + 5 * cb ** 2 - 1


def check_Rprime_inequality(a: AngleData) -> bool:
    """Whether R' > R, via the cubic in cos(beta); cross-checked against the radius formula."""
    cubic = rprime_cubic(a) > 0
    direct = rprime_squared(a, 1.0) > 1.0
    if cubic != direct:
        raise InvariantViolation("cubic criterion and radius formula disagree",
                                 {"cubic": rprime_cubic(a), "ratio_sq": rprime_squared(a)})
    return cubic
