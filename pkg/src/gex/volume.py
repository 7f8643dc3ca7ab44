"""Hyperbolic volume of the truncated tetrahedra by adaptive quadrature.

With the ideal vertex at infinity the solid lies above the planar triangle
ABD and above the hemispheres F1, S2, S3, S4.  Integrating dz / z^3 from
the lower envelope up gives the planar integrand 1 / (2 z_low^2) with

    z_low^2 = max_i (r_i^2 - |x - c_i|^2).

The maximum is attained by sphere i exactly on its power cell, a convex
polygon cut out by radical axes, so the triangle is split into at most
four polygons on each of which the integrand is analytic.  Each polygon is
fan-triangulated and integrated by a globally adaptive collapsed Gauss
rule.
"""

from __future__ import annotations

import csv
import heapq
import io
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConvergenceError, DomainError, InvariantViolation
from .geometry import AngleData, angles, realize_half_space

GAUSS_POINTS = 8
DEFAULT_MAX_SUBDIVISIONS = 200_000
LIMIT_CONSTANT = 5.419960359  # reported limit of vol(M_g)/g

_nodes, _weights = np.polynomial.legendre.leggauss(GAUSS_POINTS)
NODES = np.ascontiguousarray(0.5 * (_nodes + 1.0))
WEIGHTS = np.ascontiguousarray(0.5 * _weights)


@dataclass(frozen=True)
class VolumeResult:
    value: float
    abs_error_bound: float
    subdivisions: int = 0

    def __post_init__(self):
        if not (self.value > 0 and math.isfinite(self.abs_error_bound)):
            raise InvariantViolation("volume must be positive with a finite error bound", self)


@dataclass(frozen=True)
class PowerCell:
    center: tuple
    r2: float
    polygon: tuple  # convex, counter-clockwise

    def min_height_sq(self):
        """Smallest r^2 - |x - c|^2 on the cell; attained at a vertex by concavity."""
        cx, cy = self.center
        return min(self.r2 - (x - cx) ** 2 - (y - cy) ** 2 for x, y in self.polygon)


def _clip(poly, nx, ny, b):
    """Keep the part of ``poly`` with nx*x + ny*y <= b."""
    out = []
    k = len(poly)
    for i in range(k):
        p, q = poly[i], poly[(i + 1) % k]
        fp = nx * p[0] + ny * p[1] - b
        fq = nx * q[0] + ny * q[1] - b
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _area(poly):
    s = 0.0
    for i in range(len(poly)):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % len(poly)]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def power_cells(triangle, spheres):
    """Split ``triangle`` into the regions where each sphere is the highest."""
    tri = list(triangle)
    if _area(tri) < 0:
        tri.reverse()
    cells = []
    for i, (ci, ri) in enumerate(spheres):
        poly = tri
        for j, (cj, rj) in enumerate(spheres):
            if i == j:
                continue
            # |x-ci|^2 - ri^2 <= |x-cj|^2 - rj^2
            nx, ny = 2 * (cj[0] - ci[0]), 2 * (cj[1] - ci[1])
            b = (cj[0] ** 2 + cj[1] ** 2 - rj ** 2) - (ci[0] ** 2 + ci[1] ** 2 - ri ** 2)
            poly = _clip(poly, nx, ny, b)
            if len(poly) < 3:
                break
        if len(poly) >= 3 and _area(poly) > 0:
            cells.append(PowerCell(tuple(ci), ri * ri, tuple(poly)))
    return cells


def adaptive_integral(pieces, tol, max_subdivisions=DEFAULT_MAX_SUBDIVISIONS):
    """Globally adaptive integration of 1/(2(r2 - |x-c|^2)) over triangles.

    ``pieces`` is a list of ``(triangle, center, r2)``.  The triangle with
    the largest local error (|coarse - sum of children|) is split until the
    summed error is at most ``tol``.  Returns ``(value, error, splits)``.
    """
    heap = []
    counter = 0
    total = 0.0
    err_total = 0.0

    def push(tri, c, r2):
        nonlocal counter, total, err_total
        (x0, y0), (x1, y1), (x2, y2) = tri
        coarse, *kids = kernels.triangle_and_children(
            x0, y0, x1, y1, x2, y2, c[0], c[1], r2, NODES, WEIGHTS)
        fine = math.fsum(kids)
        err = abs(coarse - fine)
        total += fine
        err_total += err
        heapq.heappush(heap, (-err, counter, fine, tri, c, r2))
        counter += 1

    for tri, c, r2 in pieces:
        push(tri, c, r2)
    splits = 0
    while err_total > tol:
        if splits >= max_subdivisions:
            raise ConvergenceError(
                f"tolerance {tol:g} not reached after {splits} subdivisions",
                estimate=total, error_bound=err_total)
        neg_err, _, fine, tri, c, r2 = heapq.heappop(heap)
        total -= fine
        err_total += neg_err
        a, b, d = tri
        ab = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        bd = ((b[0] + d[0]) / 2, (b[1] + d[1]) / 2)
        da = ((d[0] + a[0]) / 2, (d[1] + a[1]) / 2)
        for child in ((a, ab, da), (ab, b, bd), (da, bd, d), (bd, da, ab)):
            push(child, c, r2)
        splits += 1
        if splits % 4096 == 0:
            # refresh running sums against accumulated rounding
            total = math.fsum(item[2] for item in heap)
            err_total = math.fsum(-item[0] for item in heap)
    total = math.fsum(item[2] for item in heap)
    err_total = math.fsum(-item[0] for item in heap)
    return total, err_total, splits


def tet_volume(a: AngleData, quadrature_tol: float = 1e-8,
               max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS) -> VolumeResult:
    """Volume of one truncated tetrahedron with the given angles."""
    if not quadrature_tol > 0:
        raise DomainError(f"quadrature tolerance must be positive, got {quadrature_tol}")
    h = realize_half_space(a, 1.0)
    cells = power_cells((h.A, h.B, h.D), h.spheres)
    pieces = []
    for cell in cells:
        if cell.min_height_sq() <= 0:
            raise InvariantViolation("hemispheres do not cover the base triangle", cell)
        v0 = cell.polygon[0]
        for k in range(1, len(cell.polygon) - 1):
            pieces.append(((v0, cell.polygon[k], cell.polygon[k + 1]), cell.center, cell.r2))
    value, err, splits = adaptive_integral(pieces, quadrature_tol, max_subdivisions)
    return VolumeResult(value, err, splits)


def volume_of_Mg(g: int, quadrature_tol: float = 1e-8,
                 max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS) -> VolumeResult:
    """(2g+2) isometric tetrahedra; ``quadrature_tol`` applies per tetrahedron
    and the error bound is propagated."""
    n = 2 * g + 2
    tv = tet_volume(angles(g), quadrature_tol, max_subdivisions)
    return VolumeResult(n * tv.value, n * tv.abs_error_bound, tv.subdivisions)


VOLUME_CSV_COLUMNS = ("g", "V_g", "vol_M_g", "vol_M_g_over_g", "abs_error_bound")


def volume_rows(gs, quadrature_tol=1e-8):
    rows = []
    for g in gs:
        vm = volume_of_Mg(g, quadrature_tol)
        rows.append({
            "g": g,
            "V_g": vm.value / (2 * g + 2),
            "vol_M_g": vm.value,
            "vol_M_g_over_g": vm.value / g,
            "abs_error_bound": vm.abs_error_bound,
        })
    return rows


def volume_table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(VOLUME_CSV_COLUMNS)
    for r in rows:
        w.writerow([r["g"]] + [repr(float(r[k])) for k in VOLUME_CSV_COLUMNS[1:]])
    return buf.getvalue()
