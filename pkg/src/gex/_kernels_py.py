"""Pure-Python/numpy implementations of the hot kernels.

Used when the compiled ``gex._kernels`` extension is unavailable or when
``GEX_PURE_PYTHON=1``.  Signatures and results match the extension.
"""

import numpy as np

BACKEND = "python"


def _collapsed_points(x0, y0, x1, y1, x2, y2, nodes, weights):
    s = nodes[:, None]
    t = nodes[None, :]
    px = x0 + s * (x1 - x0) + s * t * (x2 - x1)
    py = y0 + s * (y1 - y0) + s * t * (y2 - y1)
    area2 = abs((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0))
    w = area2 * (weights[:, None] * weights[None, :]) * s
    return px, py, w


def triangle_integral(x0, y0, x1, y1, x2, y2, cx, cy, r2, nodes, weights):
    """Integral of 1 / (2 (r2 - |p - c|^2)) over a triangle (collapsed Gauss rule)."""
    px, py, w = _collapsed_points(x0, y0, x1, y1, x2, y2, nodes, weights)
    h = r2 - (px - cx) ** 2 - (py - cy) ** 2
    return float(np.sum(w * 0.5 / h))


def triangle_and_children(x0, y0, x1, y1, x2, y2, cx, cy, r2, nodes, weights):
    """Return ``(coarse, child0, child1, child2, child3)`` for the midpoint split."""
    ax, ay = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
    bx, by = 0.5 * (x1 + x2), 0.5 * (y1 + y2)
    qx, qy = 0.5 * (x2 + x0), 0.5 * (y2 + y0)
    f = triangle_integral
    return (
        f(x0, y0, x1, y1, x2, y2, cx, cy, r2, nodes, weights),
        f(x0, y0, ax, ay, qx, qy, cx, cy, r2, nodes, weights),
        f(ax, ay, x1, y1, bx, by, cx, cy, r2, nodes, weights),
        f(qx, qy, bx, by, x2, y2, cx, cy, r2, nodes, weights),
        f(bx, by, qx, qy, ax, ay, cx, cy, r2, nodes, weights),
    )


def slope_table(bound, m2, ml, l2):
    """Canonical coprime slopes ``(p, q)`` with ``|p|, |q| <= bound`` and their squared lengths.

    Canonical means ``p >= 0`` and ``q > 0`` when ``p == 0``.  The length is
    that of ``p*m + q*l`` for lattice vectors with Gram entries ``m2, ml, l2``.
    """
    ps, qs = np.meshgrid(np.arange(0, bound + 1), np.arange(-bound, bound + 1), indexing="ij")
    ps = ps.ravel()
    qs = qs.ravel()
    keep = (np.gcd(ps, np.abs(qs)) == 1) & ((ps > 0) | (qs > 0))
    ps = ps[keep].astype(np.int64)
    qs = qs[keep].astype(np.int64)
    fp = ps.astype(np.float64)
    fq = qs.astype(np.float64)
    len2 = fp * fp * m2 + 2.0 * fp * fq * ml + fq * fq * l2
    return ps, qs, len2
