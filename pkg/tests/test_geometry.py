import math

import pytest
from hypothesis import given, settings, strategies as st

from gex.errors import DomainError, InvariantViolation
from gex.geometry import (
    angles,
    check_consistency,
    check_Rprime_inequality,
    cusp_angle_sums,
    edge_angle_sums,
    realize_half_space,
    rprime_cubic,
    rprime_squared,
)
from gex.triangulation import build_triangulation

any_g = st.integers(min_value=2, max_value=1000)


def test_g2_values():
    a = angles(2)
    assert a.alpha == pytest.approx(math.pi / 6)
    assert a.beta == pytest.approx(math.pi / 3)
    assert math.cos(a.gamma) == pytest.approx(1 / math.sqrt(3))
    assert math.cos(a.delta) == pytest.approx(1 / 3)


@pytest.mark.parametrize("bad", [1, 0, -3, 2.5])
def test_angles_domain(bad):
    with pytest.raises(DomainError):
        angles(bad)


@given(any_g)
def test_angle_identities(g):
    a = angles(g)
    assert max(abs(v) for v in a.residuals().values()) < 1e-12
    assert abs(check_consistency(a)) < 1e-12


def test_perturbation_breaks_identities():
    a = angles(2).perturbed(gamma=0.01)
    with pytest.raises(InvariantViolation):
        a.validate()
    assert abs(check_consistency(a)) > 1e-3


@pytest.mark.parametrize("g", [2, 5, 9])
def test_edge_and_cusp_sums(g):
    T, a = build_triangulation(g), angles(g)
    for s in edge_angle_sums(T, a).values():
        assert s == pytest.approx(2 * math.pi, abs=1e-12)
    for s in cusp_angle_sums(T, a):
        assert s == pytest.approx(math.pi, abs=1e-12)


@settings(max_examples=40)
@given(any_g, st.floats(min_value=0.1, max_value=10))
def test_half_space_realization(g, R):
    a = angles(g)
    h = realize_half_space(a, R)
    assert h.max_residual(a) < 1e-9
    assert h.Rprime ** 2 == pytest.approx(rprime_squared(a, R), rel=1e-12)


def test_rprime_g2():
    h = realize_half_space(angles(2))
    assert h.Rprime ** 2 == pytest.approx(5 / 4, abs=1e-12)


@given(any_g)
def test_rprime_exceeds_R(g):
    a = angles(g)
    assert check_Rprime_inequality(a)
    assert rprime_cubic(a) > 0


def test_rprime_cubic_sign_change():
    # the cubic in cos(beta) changes sign near cos(beta) = 0.41, well below our range
    from dataclasses import replace

    a = angles(2)
    low = replace(a, beta=math.acos(0.3))
    assert rprime_cubic(low) < 0


def test_realization_rejects_bad_radius():
    with pytest.raises(DomainError):
        realize_half_space(angles(2), 0.0)
