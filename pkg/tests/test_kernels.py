import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gex import kernels
from gex.volume import NODES, WEIGHTS

BACKENDS = kernels.backends()
coord = st.floats(min_value=-0.4, max_value=0.4)


def test_python_backend_always_present():
    assert "python" in BACKENDS


def test_selected_backend_is_importable():
    assert kernels.BACKEND in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled extension not built")
@settings(max_examples=100)
@given(coord, coord, coord, coord, coord, coord)
def test_quadrature_parity(x0, y0, x1, y1, x2, y2):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    args = (x0, y0, x1, y1, x2, y2, 0.05, -0.02, 1.0, NODES, WEIGHTS)
    a = py.triangle_and_children(*args)
    b = cy.triangle_and_children(*args)
    np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-15)


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled extension not built")
@pytest.mark.parametrize("bound", [1, 7, 40])
def test_slope_table_parity(bound):
    a = BACKENDS["python"].slope_table(bound, 4.8, -1.6, 43.2)
    b = BACKENDS["cython"].slope_table(bound, 4.8, -1.6, 43.2)
    order_a = np.lexsort((a[1], a[0]))
    order_b = np.lexsort((b[1], b[0]))
    np.testing.assert_array_equal(np.asarray(a[0])[order_a], np.asarray(b[0])[order_b])
    np.testing.assert_array_equal(np.asarray(a[1])[order_a], np.asarray(b[1])[order_b])
    np.testing.assert_allclose(np.asarray(a[2])[order_a], np.asarray(b[2])[order_b], rtol=1e-14)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_constant_integrand_gives_area(name):
    # a hemisphere of huge radius makes the integrand nearly 1/(2 r2)
    k = BACKENDS[name]
    r2 = 1e12
    val = k.triangle_integral(0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, r2, NODES, WEIGHTS)
    assert val == pytest.approx(0.5 / (2 * r2), rel=1e-9)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_slope_table_is_canonical_and_coprime(name):
    ps, qs, _ = BACKENDS[name].slope_table(12, 1.0, 0.0, 1.0)
    ps, qs = np.asarray(ps), np.asarray(qs)
    assert np.all(np.gcd(ps, np.abs(qs)) == 1)
    assert np.all((ps > 0) | ((ps == 0) & (qs > 0)))
    # count: one representative per unoriented primitive vector in the box
    brute = {(p, q) for p in range(0, 13) for q in range(-12, 13)
             if np.gcd(p, abs(q)) == 1 and (p > 0 or q > 0)}
    assert len(ps) == len(brute)


def test_env_forces_python_backend():
    env = dict(os.environ, GEX_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import gex.kernels as k; print(k.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


def test_volume_same_under_both_backends(monkeypatch):
    from gex import volume
    from gex.geometry import angles

    results = {}
    for name, mod in BACKENDS.items():
        monkeypatch.setattr(volume.kernels, "triangle_and_children", mod.triangle_and_children)
        results[name] = volume.tet_volume(angles(3), 1e-9).value
    vals = list(results.values())
    assert max(vals) - min(vals) < 1e-12
