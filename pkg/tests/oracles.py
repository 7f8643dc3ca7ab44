"""Independent high-precision references used by the tests.

The volume oracle rebuilds the base triangle from scratch: the hemisphere
F1 (radius 1) is orthogonal to three hemispheres of a common radius R'
centred at A, B, D, so its centre is the circumcentre of ABD and the
circumradius rho satisfies rho^2 = 1 + R'^2.  The dihedral angle beta
along AB forces rho * cos(delta) = cos(beta).  The integrand over each
power cell is then reduced to a one-dimensional integral in polar
coordinates around the cell's centre.
"""

import mpmath as mp

mp.mp.dps = 30


def oracle_angles(g):
    alpha = mp.pi / (2 * g + 2)
    gamma = mp.acos(1 / (2 * mp.cos(alpha)))
    return alpha, 2 * alpha, gamma, mp.pi - 2 * gamma


def oracle_triangle(g):
    alpha, beta, gamma, delta = oracle_angles(g)
    rho = mp.cos(beta) / mp.cos(delta)
    rp2 = rho ** 2 - 1
    # inscribed angles: at A and B gamma, at D delta; central angles are twice these
    tA = -mp.pi / 2 - delta
    tB = -mp.pi / 2 + delta
    tD = tB + 2 * gamma
    pts = [mp.matrix([rho * mp.cos(t), rho * mp.sin(t)]) for t in (tA, tB, tD)]
    return pts, rho, rp2


def _clip(poly, n, b):
    out = []
    k = len(poly)
    for i in range(k):
        p, q = poly[i], poly[(i + 1) % k]
        fp = n[0] * p[0] + n[1] * p[1] - b
        fq = n[0] * q[0] + n[1] * q[1] - b
        if fp <= 0:
            out.append(p)
        if fp * fq < 0:
            t = fp / (fp - fq)
            out.append(p + t * (q - p))
    return out


def _signed_edge(c, r2, P, Q):
    """Polar integral of -1/4 log(1 - rho^2/r^2) over the sector (c, P, Q), signed."""
    d = Q - P
    L = mp.sqrt(d[0] ** 2 + d[1] ** 2)
    u = d / L
    w = P - c
    cross = w[0] * (Q - c)[1] - w[1] * (Q - c)[0]
    h = abs(w[0] * u[1] - w[1] * u[0])
    if h < mp.mpf(10) ** -25:
        return mp.mpf(0)
    s = w[0] * u[0] + w[1] * u[1]
    phi0 = mp.atan2(s, h)
    phi1 = mp.atan2(s + L, h)
    f = lambda phi: -mp.log(1 - h ** 2 / (r2 * mp.cos(phi) ** 2)) / 4
    val = mp.quad(f, [phi0, phi1])
    return val if cross > 0 else -val


def oracle_tet_volume(g):
    pts, rho, rp2 = oracle_triangle(g)
    origin = mp.matrix([0, 0])
    spheres = [(origin, mp.mpf(1))] + [(p, rp2) for p in pts]
    total = mp.mpf(0)
    for i, (ci, ri2) in enumerate(spheres):
        poly = list(pts)
        for j, (cj, rj2) in enumerate(spheres):
            if i == j:
                continue
            n = 2 * (cj - ci)
            b = (cj[0] ** 2 + cj[1] ** 2 - rj2) - (ci[0] ** 2 + ci[1] ** 2 - ri2)
            poly = _clip(poly, n, b)
            if len(poly) < 3:
                break
        if len(poly) < 3:
            continue
        for k in range(len(poly)):
            total += _signed_edge(ci, ri2, poly[k], poly[(k + 1) % len(poly)])
    return total


def lobachevsky(theta):
    return mp.clsin(2, 2 * theta) / 2


def limit_tet_volume():
    """Volume of the limiting tetrahedron as g grows, 5 * Lambda(pi/6)."""
    return 5 * lobachevsky(mp.pi / 6)
