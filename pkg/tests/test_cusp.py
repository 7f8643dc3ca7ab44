import csv
import io
import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from gex.cusp import (
    MERIDIAN,
    SECOND,
    Slope,
    build_cusp_torus,
    certify_filling,
    cusp_area,
    cusp_area_from_triangles,
    edge_slope_length,
    exhaustive_slope_audit,
    length_lower_bound,
    slope_length,
    sweep_csv,
)
from gex.errors import DevelopingError, DomainError, InvariantViolation
from gex.geometry import angles
from gex.triangulation import build_triangulation

_cache = {}


def torus(g):
    if g not in _cache:
        _cache[g] = build_cusp_torus(build_triangulation(g), angles(g))
    return _cache[g]


def test_g2_anchors():
    ct = torus(2)
    ell = ct.edge_length
    assert ell ** 2 == pytest.approx(24 / 5, abs=1e-12)
    assert abs(ct.second) == pytest.approx(3 * ell, abs=1e-9)
    assert ct.theta == pytest.approx(math.acos(1 / 3), abs=1e-9)
    assert ct.lattice_det == pytest.approx(6 * 2 ** 1.5 / 1.25, abs=1e-9)


def test_g2_delta_one_quadratic_form():
    ct = torus(2)
    ell2 = 24 / 5
    for a in range(-20, 21):
        for sign in (1, -1):
            s = Slope(a, sign)
            got = slope_length(ct, s) ** 2
            assert got == pytest.approx((a * a + 9 + 2 * sign * a) * ell2, abs=1e-9)
            assert got >= 8 * ell2 - 1e-9


def test_g2_quadratic_form_sign_convention():
    ct = torus(2)
    assert slope_length(ct, Slope(1, 1)) ** 2 == pytest.approx(57.6, abs=1e-9)
    assert slope_length(ct, Slope(1, -1)) ** 2 == pytest.approx(38.4, abs=1e-9)


@pytest.mark.parametrize("g", [2, 3, 7, 15, 50])
def test_developed_torus_matches_closed_forms(g):
    a, ct = angles(g), torus(g)
    assert ct.edge_length == pytest.approx(edge_slope_length(a), abs=1e-9)
    assert ct.lattice_det == pytest.approx(cusp_area(a), abs=1e-9)
    assert ct.area == pytest.approx(cusp_area(a), abs=1e-9)
    assert ct.max_loop_residual < 1e-9
    assert ct.max_rotation_residual < 1e-9


@given(st.integers(min_value=2, max_value=500))
def test_area_formula_consistency(g):
    a = angles(g)
    assert cusp_area(a) == pytest.approx(cusp_area_from_triangles(a), rel=1e-12)
    assert edge_slope_length(a) < 6


def test_edge_length_limit():
    a = angles(10 ** 6)
    assert edge_slope_length(a) == pytest.approx(2, abs=1e-9)


def test_holonomies_lie_in_lattice():
    ct = torus(4)
    m, l = ct.meridian, ct.second
    det = m.real * l.imag - m.imag * l.real
    for tau in ct.holonomies:
        x = (tau.real * l.imag - tau.imag * l.real) / det
        y = (m.real * tau.imag - m.imag * tau.real) / det
        assert abs(x - round(x)) < 1e-9 and abs(y - round(y)) < 1e-9


def test_corrupted_triangle_fails_to_develop(monkeypatch):
    from gex import cusp

    real = cusp._reference_triangles

    def bent(T, a):
        ref, h = real(T, a)
        ref[3] = {k: z * 1.001 for k, z in ref[3].items()}
        return ref, h

    monkeypatch.setattr(cusp, "_reference_triangles", bent)
    with pytest.raises(DevelopingError):
        build_cusp_torus(build_triangulation(2), angles(2))


def test_isosceles_shape_always_tiles():
    # any gamma gives angle sum 4 gamma + 2 (pi - 2 gamma) = 2 pi at each cusp vertex
    ct = build_cusp_torus(build_triangulation(2), angles(2).perturbed(gamma=0.01, delta=-0.02))
    assert ct.max_loop_residual < 1e-9


def test_slope_validation():
    with pytest.raises(DomainError):
        Slope(2, 4)
    with pytest.raises(DomainError):
        Slope(0, 0)
    assert Slope(-3, 2).canonical() == Slope(3, -2)
    assert Slope(0, -1).canonical() == Slope(0, 1)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_distance_symmetric(p, q, r, s):
    if math.gcd(p, q) != 1 or math.gcd(r, s) != 1:
        return
    a, b = Slope(p, q), Slope(r, s)
    assert a.distance(b) == b.distance(a)
    assert a.distance(a) == 0


def test_basis_distance_one():
    assert MERIDIAN.distance(SECOND) == 1


@settings(max_examples=60)
@given(st.integers(2, 30), st.integers(-40, 40), st.integers(-40, 40))
def test_length_lower_bound(g, p, q):
    if math.gcd(p, q) != 1:
        return
    s = Slope(p, q)
    L = slope_length(torus(g), s)
    assert L >= length_lower_bound(angles(g), s.distance(MERIDIAN)) * (1 - 1e-12)


def test_certificates_g2():
    ct = torus(2)
    m = certify_filling(ct, MERIDIAN)
    assert m.verdict == "exceptional-meridian"
    h = certify_filling(ct, Slope(1, 1))
    assert h.verdict == "hyperbolic"
    assert h.length_sq == pytest.approx(57.6, abs=1e-9)
    doc = json.loads(h.to_json())
    assert set(doc) >= {"g", "slope", "length", "length_sq", "distance", "verdict", "citations"}
    assert doc["slope"] == [1, 1] and doc["distance"] == 1


def test_certificate_canonicalises_slope():
    cert = certify_filling(torus(3), Slope(-2, -1))
    assert (cert.slope.p, cert.slope.q) == (2, 1)


def test_undecided_is_rejected():
    # a torus whose basis is artificially shrunk produces a short non-meridian slope
    from dataclasses import replace

    ct = replace(torus(2), second=torus(2).second / 10)
    with pytest.raises(InvariantViolation):
        certify_filling(ct, SECOND)
    assert certify_filling(ct, SECOND, strict=False).verdict == "undecided"


@pytest.mark.parametrize("g", [2, 3, 5])
def test_audit(g):
    audit = exhaustive_slope_audit(torus(g), 50)
    assert audit.ok
    assert audit.short_slopes[0][:2] == (1, 0)
    assert audit.min_nonmeridian_len_sq > 36


def test_g5_every_nonmeridian_slope_hyperbolic():
    ct = torus(5)
    for p in range(0, 51):
        for q in range(-50, 51):
            if q == 0 or math.gcd(p, q) != 1 or (p == 0 and q < 0):
                continue
            assert certify_filling(ct, Slope(p, q)).verdict == "hyperbolic"


def test_sweep_csv():
    text = sweep_csv(torus(2), 3)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["p", "q", "delta", "length_sq", "verdict"]
    verdicts = {(int(r[0]), int(r[1])): r[4] for r in rows[1:]}
    assert verdicts[(1, 0)] == "exceptional-meridian"
    assert all(v == "hyperbolic" for k, v in verdicts.items() if k != (1, 0))
    with pytest.raises(DomainError):
        sweep_csv(torus(2), 0)
