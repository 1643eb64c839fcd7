import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lpbilliards.errors import InvalidInputError
from lpbilliards.geometry import (
    BoundarySpec,
    boundary_acceleration,
    boundary_point,
    boundary_velocity,
    implicit_level,
    wrap_unit,
)

from conftest import away_from_axes

TWO_PI = 2 * np.pi

# 50-digit mpmath evaluations of the regularized curve (mpmath.diff for derivatives)
P3_POINT_AT_01 = (0.86823728054127051901, 0.70169081251709596742)
P3_VELOCITY_AT_01 = (-2.6423362310052749548, 4.0455107429560929612)
P3_ACCEL_AT_02 = (-50.012239466887559714, -26.3487381909238906)


def test_spec_validation():
    with pytest.raises(InvalidInputError):
        BoundarySpec(1.5)
    with pytest.raises(InvalidInputError):
        BoundarySpec(3.0, eps=0.0)
    with pytest.raises(InvalidInputError):
        BoundarySpec(3.0, eps=1e-6)


@pytest.mark.parametrize(
    "p, t, expected",
    [
        (3.0, 0.0, (1.0, 0.0)),
        (2.0, 0.125, (np.sqrt(0.5), np.sqrt(0.5))),
        (3.0, 0.5, (-1.0, 0.0)),
        (3.0, 0.1, P3_POINT_AT_01),
    ],
)
def test_boundary_point_examples(p, t, expected):
    np.testing.assert_allclose(boundary_point(BoundarySpec(p), t), expected, rtol=1e-12, atol=1e-9)


def test_point_matches_mpmath_live():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 50
    eps = mp.mpf("1e-14")

    def comp(c, p):
        return mp.sign(c) * (abs(c) + eps) ** (mp.mpf(2) / p)

    spec = BoundarySpec(3.5)
    # axis points excluded: float sin(pi) is 1.2e-16, not 0, which the
    # regularization amplifies to ~eps^(2/p)
    for t in np.linspace(0.01, 0.99, 17)[[i for i in range(17) if i % 4 != 0]]:
        tt = mp.mpf(float(t))
        ref = [comp(mp.cos(2 * mp.pi * tt), 3.5), comp(mp.sin(2 * mp.pi * tt), 3.5)]
        np.testing.assert_allclose(boundary_point(spec, t), [float(v) for v in ref], rtol=1e-13)


def test_non_finite_parameter_rejected():
    with pytest.raises(InvalidInputError):
        boundary_point(BoundarySpec(3.0), np.nan)
    with pytest.raises(InvalidInputError):
        boundary_velocity(BoundarySpec(3.0), [0.1, np.inf])


def test_parameter_reduced_mod_one():
    spec = BoundarySpec(3.0)
    np.testing.assert_array_equal(boundary_point(spec, 1.3), boundary_point(spec, wrap_unit(1.3)))
    assert wrap_unit(-1e-20) == 0.0


@pytest.mark.parametrize(
    "t, vel",
    [(0.0, (0.0, TWO_PI)), (0.25, (-TWO_PI, 0.0))],
)
def test_circle_velocity(t, vel):
    np.testing.assert_allclose(boundary_velocity(BoundarySpec(2.0), t), vel, atol=1e-9)


@pytest.mark.parametrize(
    "t, acc",
    [
        (0.0, (-TWO_PI**2, 0.0)),
        (0.125, (-TWO_PI**2 * np.sqrt(0.5), -TWO_PI**2 * np.sqrt(0.5))),
    ],
)
def test_circle_acceleration(t, acc):
    np.testing.assert_allclose(boundary_acceleration(BoundarySpec(2.0), t), acc, atol=1e-6)


def test_l3_derivative_reference_values():
    spec = BoundarySpec(3.0)
    np.testing.assert_allclose(boundary_velocity(spec, 0.1), P3_VELOCITY_AT_01, rtol=1e-12)
    np.testing.assert_allclose(boundary_acceleration(spec, 0.2), P3_ACCEL_AT_02, rtol=1e-11)


def richardson(f, t, h):
    d1 = (f(t + h) - f(t - h)) / (2 * h)
    d2 = (f(t + 2 * h) - f(t - 2 * h)) / (4 * h)
    return (4 * d1 - d2) / 3


@pytest.mark.parametrize("p", [2.0, 2.5, 3.0, 4.0, 7.0])
def test_velocity_matches_finite_differences(p, rng):
    spec = BoundarySpec(p)
    ts = away_from_axes(rng, 1000)
    h = 1e-7
    fd = (boundary_point(spec, ts + h) - boundary_point(spec, ts - h)) / (2 * h)
    exact = boundary_velocity(spec, ts)
    err = np.linalg.norm(fd - exact, axis=1) / np.linalg.norm(exact, axis=1)
    assert err.max() <= 1e-6


@pytest.mark.parametrize("p", [2.0, 2.5, 3.0, 4.0, 7.0])
def test_acceleration_matches_finite_differences(p, rng):
    spec = BoundarySpec(p)
    ts = away_from_axes(rng, 1000)
    h = 1e-7
    fd = (boundary_velocity(spec, ts + h) - boundary_velocity(spec, ts - h)) / (2 * h)
    exact = boundary_acceleration(spec, ts)
    err = np.linalg.norm(fd - exact, axis=1) / np.linalg.norm(exact, axis=1)
    assert err.max() <= 1e-5


def test_richardson_oracle_agrees_at_reference_point():
    spec = BoundarySpec(3.0)
    fd = richardson(lambda t: boundary_point(spec, t), 0.1, 1e-4)
    np.testing.assert_allclose(fd, P3_VELOCITY_AT_01, rtol=1e-9)


ts = st.floats(-3, 3, allow_nan=False)
ps = st.sampled_from([2.0, 2.5, 3.0, 4.0, 10.0])


def symmetry_tol(spec, t):
    """1e-9, widened to the regularization scale eps^(2/p) on the axes.

    At multiples of 1/4 one trig factor is a rounding residue (~1e-16)
    rather than 0, and (|c| + eps)^(2/p) turns that into ~eps^(2/p).
    """
    r = (4 * np.asarray(t)) % 1
    near_axis = min(r, 1 - r) < 4e-6
    return 1e-9 + (3 * spec.eps ** spec.power if near_axis else 0.0)


@given(ts, ps)
def test_quarter_turn_symmetry(t, p):
    spec = BoundarySpec(p)
    x, y = boundary_point(spec, t)
    np.testing.assert_allclose(boundary_point(spec, t + 0.25), (-y, x), atol=symmetry_tol(spec, t))


@given(ts, ps)
def test_reflection_symmetry(t, p):
    spec = BoundarySpec(p)
    x, y = boundary_point(spec, t)
    np.testing.assert_allclose(boundary_point(spec, -t), (x, -y), atol=symmetry_tol(spec, t))


@given(st.floats(0.001, 0.249), ps, st.integers(0, 7))
def test_symmetry_exact_tolerance_off_axis(t, p, k):
    spec = BoundarySpec(p)
    x, y = boundary_point(spec, t)
    rot = np.array([(x, y), (-y, x), (-x, -y), (y, -x)])[k % 4]
    np.testing.assert_allclose(boundary_point(spec, t + 0.25 * k), rot, atol=1e-9)
    np.testing.assert_allclose(boundary_point(spec, -t), (x, -y), atol=1e-9)


@given(ts)
def test_circle_case(t):
    assert abs(np.hypot(*boundary_point(BoundarySpec(2.0), t)) - 1) < 1e-7


@given(ts, ps)
def test_points_lie_on_boundary(t, p):
    spec = BoundarySpec(p)
    assert abs(implicit_level(spec, boundary_point(spec, t)) - 1) < 1e-9
