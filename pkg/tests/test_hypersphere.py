import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ckunitary import (
    DegenerateInputError,
    DomainError,
    HypersphericalPoint,
    HypersphericalState,
    PureState,
    angles_from_state,
    fold_first_sector,
    from_cartesian,
    state_from_angles,
    to_cartesian,
    wrap_phase,
)
from helpers import random_state

PI = math.pi

finite_angles = st.floats(
    allow_nan=False, allow_infinity=False, min_value=-1e6, max_value=1e6
)


# -- angle range helpers --------------------------------------------------------


@given(finite_angles)
def test_wrap_phase_range_and_value(x):
    w = wrap_phase(x)
    assert 0.0 <= w < 2 * PI
    assert abs(cmath.exp(1j * w) - cmath.exp(1j * x)) < 1e-9


def test_wrap_phase_near_full_turn():
    assert wrap_phase(-1e-20) == 0.0
    assert wrap_phase(2 * PI) == 0.0


@given(finite_angles)
def test_fold_first_sector_preserves_magnitudes(x):
    y = fold_first_sector(x)
    assert 0.0 <= y <= PI / 2
    assert abs(abs(math.sin(x)) - math.sin(y)) < 1e-9
    assert abs(abs(math.cos(x)) - math.cos(y)) < 1e-9


# -- point validation ------------------------------------------------------------


def test_point_validation():
    HypersphericalPoint(3, 1.0, (PI / 3, 5.0))
    with pytest.raises(DomainError):
        HypersphericalPoint(3, 1.0, (4.0, 1.0))  # polar beyond pi
    with pytest.raises(DomainError):
        HypersphericalPoint(3, 1.0, (1.0, 7.0))  # azimuth beyond 2*pi
    with pytest.raises(DomainError):
        HypersphericalPoint(3, -1.0, (1.0, 1.0))
    with pytest.raises(DomainError):
        HypersphericalPoint(3, 1.0, (1.0,))
    with pytest.raises(DomainError):
        HypersphericalPoint(1, 1.0, (0.3,))  # n=1 angle must be 0 or pi


# -- cartesian conversions --------------------------------------------------------


def test_to_cartesian_axis_aligned():
    assert np.allclose(to_cartesian(HypersphericalPoint(2, 1.0, (0.0,))), [1.0, 0.0])
    out = to_cartesian(HypersphericalPoint(3, 1.0, (PI / 2, PI / 2)))
    assert np.max(np.abs(out - np.array([0.0, 0.0, 1.0]))) < 1e-15


def test_to_cartesian_hand_computed_four_dim():
    out = to_cartesian(HypersphericalPoint(4, 2.0, (PI / 3, PI / 4, PI / 6)))
    expected = np.array(
        [1.0, math.sqrt(6) / 2, 3 * math.sqrt(2) / 4, math.sqrt(6) / 4]
    )
    assert np.max(np.abs(out - expected)) < 1e-14
    assert abs(np.sum(out**2) - 4.0) < 1e-12


def test_to_cartesian_two_point_case():
    assert np.array_equal(to_cartesian(HypersphericalPoint(1, 2.5, (PI,))), [-2.5])


def test_to_cartesian_norm_invariant(rng):
    for _ in range(50):
        n = int(rng.integers(2, 7))
        thetas = list(rng.uniform(0, PI, n - 2)) + [rng.uniform(0, 2 * PI)]
        r = float(rng.uniform(0.1, 5.0))
        xs = to_cartesian(HypersphericalPoint(n, r, tuple(thetas)))
        assert abs(np.sum(xs**2) - r * r) < 1e-12 * max(r * r, 1.0)


def test_from_cartesian_axis_aligned():
    p = from_cartesian([1.0, 0.0, 0.0])
    assert p.r == 1.0 and p.thetas == (0.0, 0.0)


def test_from_cartesian_negative_axis():
    p = from_cartesian([0.0, 0.0, -1.0])
    assert abs(p.r - 1.0) < 1e-15
    assert abs(p.thetas[0] - PI / 2) < 1e-15
    assert abs(p.thetas[1] - 3 * PI / 2) < 1e-15


def test_from_cartesian_one_dim_sign():
    assert from_cartesian([3.0]).thetas == (0.0,)
    assert from_cartesian([-3.0]).thetas == (PI,)


def test_from_cartesian_rejects_zero():
    with pytest.raises(DegenerateInputError):
        from_cartesian([0.0, 0.0, 0.0])


def test_cartesian_round_trip(rng):
    for _ in range(100):
        n = int(rng.integers(2, 7))
        xs = rng.standard_normal(n)
        back = to_cartesian(from_cartesian(xs))
        assert np.max(np.abs(back - xs)) < 1e-12


# -- state mapping ----------------------------------------------------------------


def test_state_from_angles_four_dim_pattern(rng):
    phis = tuple(rng.uniform(0, 2 * PI, 4))
    h = HypersphericalState(4, (PI / 4, PI / 4, PI / 4), phis)
    c = state_from_angles(h).amplitudes
    s, co = math.sin(PI / 4), math.cos(PI / 4)
    expected = np.array(
        [
            co * cmath.exp(1j * phis[0]),
            s * co * cmath.exp(1j * phis[1]),
            s * s * co * cmath.exp(1j * phis[2]),
            s * s * s * cmath.exp(1j * phis[3]),
        ]
    )
    assert np.max(np.abs(c - expected)) < 1e-14


def test_state_from_angles_first_basis_state():
    h = HypersphericalState(3, (0.0, 0.0), (0.0, 0.0, 0.0))
    assert np.array_equal(state_from_angles(h).amplitudes, [1.0, 0.0, 0.0])


def test_state_from_angles_phase_flip():
    h = HypersphericalState(2, (PI / 2,), (0.0, PI))
    c = state_from_angles(h).amplitudes
    assert np.max(np.abs(c - np.array([0.0, -1.0]))) < 1e-15


def test_state_norm_by_construction(rng):
    for _ in range(50):
        n = int(rng.integers(1, 8))
        h = HypersphericalState(
            n,
            tuple(rng.uniform(0, PI / 2, n - 1)),
            tuple(rng.uniform(0, 2 * PI, n)),
        )
        c = state_from_angles(h).amplitudes
        assert abs(np.sum(np.abs(c) ** 2) - 1.0) < 1e-13


def test_angles_from_state_basis_state():
    h = angles_from_state(PureState.from_components([1.0, 0.0, 0.0]))
    assert h.thetas == (0.0, 0.0)
    assert h.phis == (0.0, 0.0, 0.0)


def test_angles_from_state_equal_superposition():
    h = angles_from_state(PureState.from_components([1 / math.sqrt(2), 1 / math.sqrt(2)]))
    assert abs(h.thetas[0] - PI / 4) < 1e-15
    assert h.phis == (0.0, 0.0)


def test_angles_from_state_explicit_inverse_formulas(rng):
    psi = PureState.from_components(random_state(4, rng))
    r = np.abs(psi.amplitudes)
    h = angles_from_state(psi)
    assert abs(h.thetas[0] - math.atan2(math.sqrt(r[1] ** 2 + r[2] ** 2 + r[3] ** 2), r[0])) < 1e-14
    assert abs(h.thetas[1] - math.atan2(math.sqrt(r[2] ** 2 + r[3] ** 2), r[1])) < 1e-14
    assert abs(h.thetas[2] - math.atan2(r[3], r[2])) < 1e-14
    for k in range(4):
        assert abs(h.phis[k] - wrap_phase(cmath.phase(psi.amplitudes[k]))) < 1e-14


def test_angles_stay_in_first_sector(rng):
    for _ in range(50):
        n = int(rng.integers(2, 7))
        h = angles_from_state(PureState.from_components(random_state(n, rng)))
        assert all(0.0 <= t <= PI / 2 for t in h.thetas)
        assert all(0.0 <= p < 2 * PI for p in h.phis)


def test_angle_round_trip_interior(rng):
    for _ in range(100):
        n = int(rng.integers(2, 7))
        h = HypersphericalState(
            n,
            tuple(rng.uniform(0.05, PI / 2 - 0.05, n - 1)),
            tuple(rng.uniform(0.05, 2 * PI - 0.05, n)),
        )
        back = angles_from_state(state_from_angles(h))
        assert np.max(np.abs(np.array(back.thetas) - np.array(h.thetas))) < 1e-10
        assert np.max(np.abs(np.array(back.phis) - np.array(h.phis))) < 1e-10


def test_state_round_trip_degenerate():
    # zero amplitudes survive the round trip at the state level
    psi = PureState.from_components([0.0, 0.6, 0.0, 0.8j])
    back = state_from_angles(angles_from_state(psi))
    assert np.max(np.abs(back.amplitudes - psi.amplitudes)) < 1e-12


def test_relative_phases():
    h = HypersphericalState(3, (0.3, 0.4), (1.0, 2.5, 0.5))
    rel = h.relative_phases()
    assert abs(rel[0] - 1.5) < 1e-15
    assert abs(rel[1] - wrap_phase(-0.5)) < 1e-15


def test_one_dim_state():
    h = HypersphericalState(1, (), (1.2,))
    c = state_from_angles(h).amplitudes
    assert abs(c[0] - cmath.exp(1.2j)) < 1e-15
    back = angles_from_state(PureState.from_components([cmath.exp(1.2j)]))
    assert back.thetas == ()
    assert abs(back.phis[0] - 1.2) < 1e-15


def test_pure_state_validation():
    with pytest.raises(ValueError):
        PureState.from_components([0.5, 0.5])
    with pytest.raises(DomainError):
        PureState(3, np.array([1.0, 0.0]))


def test_state_validation_ranges():
    with pytest.raises(DomainError):
        HypersphericalState(2, (2.0,), (0.0, 0.0))  # theta beyond pi/2
    with pytest.raises(DomainError):
        HypersphericalState(2, (0.5,), (0.0, 6.5))  # phi beyond 2*pi
    with pytest.raises(DomainError):
        HypersphericalState(2, (0.5, 0.5), (0.0, 0.0))
