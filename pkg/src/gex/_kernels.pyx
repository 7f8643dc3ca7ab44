# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``gex._kernels_py`` for the reference versions."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs

BACKEND = "cython"


cdef double _tri(double x0, double y0, double x1, double y1, double x2, double y2,
                 double cx, double cy, double r2,
                 const double[:] nodes, const double[:] weights) noexcept nogil:
    cdef Py_ssize_t i, j, n = nodes.shape[0]
    cdef double s, t, px, py, dx, dy, total = 0.0, inner
    cdef double area2 = fabs((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0))
    for i in range(n):
        s = nodes[i]
        inner = 0.0
        for j in range(n):
            t = nodes[j]
            px = x0 + s * (x1 - x0) + s * t * (x2 - x1)
            py = y0 + s * (y1 - y0) + s * t * (y2 - y1)
            dx = px - cx
            dy = py - cy
            inner += weights[j] * 0.5 / (r2 - dx * dx - dy * dy)
        total += weights[i] * s * inner
    return area2 * total


def triangle_integral(double x0, double y0, double x1, double y1, double x2, double y2,
                      double cx, double cy, double r2, const double[:] nodes, const double[:] weights):
    return _tri(x0, y0, x1, y1, x2, y2, cx, cy, r2, nodes, weights)


def triangle_and_children(double x0, double y0, double x1, double y1, double x2, double y2,
                          double cx, double cy, double r2, const double[:] nodes, const double[:] weights):
    cdef double ax = 0.5 * (x0 + x1), ay = 0.5 * (y0 + y1)
    cdef double bx = 0.5 * (x1 + x2), by = 0.5 * (y1 + y2)
    cdef double qx = 0.5 * (x2 + x0), qy = 0.5 * (y2 + y0)
    return (
        _tri(x0, y0, x1, y1, x2, y2, cx, cy, r2, nodes, weights),
        _tri(x0, y0, ax, ay, qx, qy, cx, cy, r2, nodes, weights),
        _tri(ax, ay, x1, y1, bx, by, cx, cy, r2, nodes, weights),
        _tri(qx, qy, bx, by, x2, y2, cx, cy, r2, nodes, weights),
        _tri(bx, by, qx, qy, ax, ay, cx, cy, r2, nodes, weights),
    )


cdef long _gcd(long a, long b) noexcept nogil:
    cdef long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


def slope_table(long bound, double m2, double ml, double l2):
    cdef long p, q, k = 0
    cdef long cap = (bound + 1) * (2 * bound + 1)
    cdef cnp.ndarray[cnp.int64_t] ps = np.empty(cap, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t] qs = np.empty(cap, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t] len2 = np.empty(cap, dtype=np.float64)
    for p in range(0, bound + 1):
        for q in range(-bound, bound + 1):
            if _gcd(p, q) != 1:
                continue
            if p == 0 and q <= 0:
                continue
            ps[k] = p
            qs[k] = q
            len2[k] = (<double>p) * p * m2 + 2.0 * p * q * ml + (<double>q) * q * l2
            k += 1
    return ps[:k], qs[:k], len2[:k]
