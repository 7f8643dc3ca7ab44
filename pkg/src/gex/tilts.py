"""Tilts of the geometric tetrahedra and the canonicity certificate for T_g.

Faces are numbered by the opposite vertex: F1 is opposite the ideal vertex,
F4 opposite the equatorial vertex joined to it by the delta edge, and F2,
F3 opposite the two apexes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import DomainError, InvariantViolation
from .geometry import AngleData

NOTES = (
    "the third tilt expression is evaluated as the tilt of F4 (the face opposite "
    "the delta-edge vertex); it is the only face left once F1, F2 and F3 are assigned",
    "k is an unspecified positive scale; only k-independent sign statements are certified",
)


@dataclass(frozen=True)
class TiltData:
    g: int
    r: float
    k: float
    d1: float
    d2: float
    d3: float
    d4: float
    t: tuple  # (t(F1), t(F2), t(F3), t(F4))


def _d_values(a: AngleData, r: float):
    ca, cb, cc, cd = (math.cos(x) for x in (a.alpha, a.beta, a.gamma, a.delta))
    sc, sd = math.sin(a.gamma), math.sin(a.delta)
    d1 = 2 * r * (sc * sc * sd) / (2 * sc * ca + sd * cb)
    d2 = ca * ca + cb * cb + cc * cc + 2 * ca * cb * cc - 1
    d4 = 2 * ca * ca + cd * cd + 2 * ca * ca * cd - 1
    return d1, d2, d4


def compute_tilts(a: AngleData, r: float, k: float = 1.0) -> TiltData:
    if not (r > 0 and k > 0):
        raise DomainError(f"r and k must be positive, got r={r}, k={k}")
    ca, cb, cc, cd = (math.cos(x) for x in (a.alpha, a.beta, a.gamma, a.delta))
    d1, d2, d4 = _d_values(a, r)
    s2, s4 = math.sqrt(d2), math.sqrt(d4)
    t1 = d1 - k * (2 * s2 * ca + s4 * cb)
    t23 = -d1 * ca + k * (s2 * (1 - cd) - s4 * cc)
    t4 = -d1 * cb + k * (-2 * s2 * cc + s4)
    return TiltData(a.g, r, k, d1, d2, d2, d4, (t1, t23, t23, t4))


def check_tilt_identities(a: AngleData):
    """Both k-coefficients that must vanish for the family angles."""
    cc, cd = math.cos(a.gamma), math.cos(a.delta)
    _, d2, d4 = _d_values(a, 1.0)
    s2, s4 = math.sqrt(d2), math.sqrt(d4)
    return s2 * (1 - cd) - s4 * cc, -2 * s2 * cc + s4


def tilt_identity_witness(a: AngleData) -> dict:
    res1, res2 = check_tilt_identities(a)
    _, d2, d4 = _d_values(a, 1.0)
    return {
        "res1": res1,
        "res2": res2,
        "d4_minus_4d2cos2gamma": d4 - 4 * d2 * math.cos(a.gamma) ** 2,
        # 1 - cos(delta) = 2 cos^2(gamma) whenever delta = pi - 2 gamma
        "one_minus_cos_delta": (1 - math.cos(a.delta)) - 2 * math.cos(a.gamma) ** 2,
        "d2": d2,
        "d4": d4,
    }


def r_threshold(a: AngleData, k: float = 1.0) -> float:
    """The value of r below which t(F1) < 0."""
    ca, cb = math.cos(a.alpha), math.cos(a.beta)
    sc, sd = math.sin(a.gamma), math.sin(a.delta)
    _, d2, d4 = _d_values(a, 1.0)
    return k * (2 * math.sqrt(d2) * ca + math.sqrt(d4) * cb) * (2 * sc * ca + sd * cb) / (2 * sc * sc * sd)


def face_label(T, tet: int, face: int) -> int:
    """Index 1..4 of the face opposite slot ``face`` in tetrahedron ``tet``."""
    ideal = T.ideal_slot(tet)
    if face == ideal:
        return 1
    if face in (0, 1):
        return 2 + face
    return 4


@dataclass(frozen=True)
class CanonicityCertificate:
    g: int
    r_used: float
    k_used: float
    r_threshold: float
    tilts: tuple
    per_face_pair_sums: tuple  # ((pair id, sum), ...)
    notes: tuple = field(default=NOTES)

    @property
    def verdict(self) -> bool:
        return all(s < 0 for _, s in self.per_face_pair_sums)

    def to_dict(self):
        return {
            "g": self.g,
            "r_used": self.r_used,
            "k_used": self.k_used,
            "r_threshold": self.r_threshold,
            "tilts": list(self.tilts),
            "pair_sums": [{"pair": pid, "sum": s} for pid, s in self.per_face_pair_sums],
            "verdict": self.verdict,
            "notes": list(self.notes),
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), sort_keys=True, **kwargs)


def certify_canonical(T, a: AngleData, k: float = 1.0, r: float | None = None,
                      strict: bool = True) -> CanonicityCertificate:
    """Sum tilts over every glued face pair of T at r = r*/2 (or the given r).

    With ``strict`` a failing verdict at the default r raises, since for this
    family the certificate must succeed.
    """
    if T.g != a.g:
        raise DomainError(f"triangulation is for g={T.g} but angles for g={a.g}")
    rstar = r_threshold(a, k)
    r_used = rstar / 2 if r is None else r
    td = compute_tilts(a, r_used, k)
    sums = []
    for (t, f), (u, f2) in T.face_gluing_pairs():
        i, j = face_label(T, t, f), face_label(T, u, f2)
        pid = f"{t}:F{i}|{u}:F{j}"
        sums.append((pid, td.t[i - 1] + td.t[j - 1]))
    cert = CanonicityCertificate(a.g, r_used, k, rstar, td.t, tuple(sums))
    if strict and r is None and not cert.verdict:
        raise InvariantViolation("canonicity certificate failed at r = r*/2", cert)
    return cert
