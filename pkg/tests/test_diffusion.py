import math

import numpy as np
import pytest

from fd_oracle import evolve_fd, gaussian_l1_difference
from relqopt.constants import C_LIGHT, PLANCK_H
from relqopt.diffusion import (
    BlochTensorModel,
    CircleDensity,
    DiffusionParams,
    StokesLinear,
    affine_parameter,
    angle_shift,
    diffusion_bound_from_decay,
    drift_bound_from_angle,
    equivariance_check,
    evolve_equator,
    polarization_decay,
    stokes_angle,
)
from relqopt.errors import DomainError

LEO_T = 400e3 / C_LIGHT
LEO_NU = 3.75e14


def _constant_model(c_diff=0.05, d_drift=0.3):
    return BlochTensorModel(
        k_tensor=lambda th: np.diag([c_diff, c_diff]),
        u_vector=lambda th: np.array([0.0, d_drift]),
        density_of_states=lambda th: math.sin(th) + 1e-3,
    )


# ----------------------------------------------------------- circle density


def test_uniform_density_is_stationary():
    rho = CircleDensity.uniform(modes=32)
    for c, d in ((0.0, 0.0), (0.5, 0.0), (0.0, 2.0), (0.3, -1.0)):
        out = evolve_equator(rho, DiffusionParams(c, d), 5.0)
        assert np.allclose(out.coefficients, rho.coefficients, atol=1e-15)


def test_density_normalization_enforced():
    bad = np.zeros(5, dtype=complex)
    bad[0] = 1.0  # should be 1/(2 pi)
    with pytest.raises(DomainError):
        CircleDensity(bad)


def test_negative_density_rejected():
    c = np.zeros(3, dtype=complex)
    c[0] = 1.0 / (2.0 * math.pi)
    c[1] = 0.6 / (2.0 * math.pi)  # |rho_1| too large: density dips negative
    with pytest.raises(DomainError):
        CircleDensity(c)


def test_grid_round_trip():
    rho = CircleDensity.wrapped_gaussian(mean=-0.7, sigma=0.5, modes=64)
    grid = rho.to_grid(512)
    back = CircleDensity.from_grid(grid, modes=64)
    assert np.allclose(back.coefficients, rho.coefficients, atol=1e-12)
    assert grid.mean() * 2.0 * math.pi == pytest.approx(1.0, abs=1e-12)


def test_coefficient_conjugate_symmetry():
    rho = CircleDensity.wrapped_gaussian(mean=0.3, sigma=0.8, modes=16)
    for m in range(-16, 17):
        assert rho.coefficient(m) == pytest.approx(np.conj(rho.coefficient(-m)), abs=1e-15)
    assert rho.coefficient(99) == 0.0


def test_circular_mean_and_resultant():
    rho = CircleDensity.wrapped_gaussian(mean=1.1, sigma=0.4, modes=64)
    assert rho.circular_mean() == pytest.approx(1.1, abs=1e-10)
    assert rho.resultant_length() == pytest.approx(math.exp(-0.5 * 0.4**2), rel=1e-10)
    with pytest.raises(DomainError):
        CircleDensity.uniform(8).circular_mean()


# -------------------------------------------------------------- evolution


def test_pure_drift_is_rigid_rotation():
    rho = CircleDensity.wrapped_gaussian(mean=0.4, sigma=0.3, modes=128)
    d, lam = 0.8, 2.5
    out = evolve_equator(rho, DiffusionParams(0.0, d), lam)
    expected = CircleDensity.wrapped_gaussian(mean=0.4 + d * lam, sigma=0.3, modes=128)
    assert np.allclose(out.coefficients, expected.coefficients, atol=1e-14)
    # moments preserved under pure drift
    assert out.resultant_length() == pytest.approx(rho.resultant_length(), rel=1e-14)


def test_probability_is_conserved():
    rho = CircleDensity.wrapped_gaussian(mean=0.0, sigma=0.25, modes=128)
    out = evolve_equator(rho, DiffusionParams(0.7, -0.4), 3.0)
    assert out.coefficient(0) == rho.coefficient(0)
    assert abs(2.0 * math.pi * out.coefficient(0) - 1.0) < 1e-12
    grid = out.to_grid(1024)
    assert grid.mean() * 2.0 * math.pi == pytest.approx(1.0, abs=1e-12)


def test_mode_magnitudes_non_increasing():
    rho = CircleDensity.wrapped_gaussian(mean=0.2, sigma=0.3, modes=64)
    params = DiffusionParams(0.05, 1.3)
    lams = [0.0, 0.1, 0.5, 2.0]
    evolved = [evolve_equator(rho, params, lam) for lam in lams]
    for earlier, later in zip(evolved, evolved[1:]):
        assert np.all(np.abs(later.coefficients) <= np.abs(earlier.coefficients) + 1e-15)


def test_mean_drifts_at_drift_rate():
    rho = CircleDensity.wrapped_gaussian(mean=0.15, sigma=0.2, modes=128)
    d, lam = 0.6, 1.7
    out = evolve_equator(rho, DiffusionParams(0.01, d), lam)
    shift = (out.circular_mean() - rho.circular_mean()) % (2.0 * math.pi)
    assert shift == pytest.approx((d * lam) % (2.0 * math.pi), abs=1e-8)


def test_resultant_decay_matches_depolarization_exponent():
    rho = CircleDensity.wrapped_gaussian(mean=0.0, sigma=0.3, modes=64)
    c_diff = 0.12
    t, nu = 1.3e-3, 3.75e14
    # reduced-time convention: lambda = 4t/nu makes exp(-c lambda) = exp(-mu)
    lam = 4.0 * t / nu
    out = evolve_equator(rho, DiffusionParams(c_diff, 0.0), lam)
    mu = polarization_decay(t, nu, c_diff)
    assert out.resultant_length() / rho.resultant_length() == pytest.approx(math.exp(-mu), rel=1e-12)


def test_spectral_solution_matches_finite_difference_oracle():
    assert gaussian_l1_difference() <= 1e-4


def test_oracle_itself_handles_pure_drift():
    # sanity on the oracle: pure drift rigidly translates the profile
    rho = CircleDensity.wrapped_gaussian(mean=1.0, sigma=0.5, modes=128)
    n = 2048
    v0 = rho.to_grid(n, clamp=False)
    d, lam = 0.5, 0.2
    fd = evolve_fd(v0, 0.0, d, lam)
    expected = CircleDensity.wrapped_gaussian(mean=1.0 + d * lam, sigma=0.5, modes=128).to_grid(n, clamp=False)
    h = 2.0 * math.pi / n
    assert float(np.sum(np.abs(fd - expected)) * h) < 5e-3  # first-order upwind


# ---------------------------------------------------------- reduced forms


def test_affine_parameter():
    assert affine_parameter(0.0, 1e14) == 0.0
    assert affine_parameter(1.0, 1e14) == pytest.approx(1.0 / (PLANCK_H * 1e14), rel=1e-15)
    with pytest.raises(DomainError):
        affine_parameter(1.0, 0.0)


def test_effective_exposure_leo():
    # t/nu exposure for a 400 km light time at 800 nm
    assert angle_shift(LEO_T, LEO_NU, 1.0) == pytest.approx(3.56e-18, rel=1e-2)
    assert angle_shift(0.0, LEO_NU, 4e-8) == 0.0


def test_doubling_frequency_halves_rates():
    t, d, c = 2.0, 3e-8, 2e-9
    assert angle_shift(t, 2 * LEO_NU, d) == pytest.approx(0.5 * angle_shift(t, LEO_NU, d), rel=1e-15)
    assert polarization_decay(t, 2 * LEO_NU, c) == pytest.approx(0.5 * polarization_decay(t, LEO_NU, c), rel=1e-15)


def test_leo_forecasts():
    assert angle_shift(LEO_T, LEO_NU, 4e-8) == pytest.approx(1.4e-25, rel=0.05)
    assert polarization_decay(LEO_T, LEO_NU, 2e-9) == pytest.approx(2.8e-26, rel=0.05)
    assert polarization_decay(0.0, LEO_NU, 2e-9) == 0.0


def test_cmb_inversions():
    t, nu = 4.35e17, 1.6e11
    d = drift_bound_from_angle(0.1, t, nu)
    c = diffusion_bound_from_decay(0.025, t, nu)
    assert d == pytest.approx(3.7e-8, rel=0.01)
    assert c == pytest.approx(2.3e-9, rel=0.01)


def test_bounds_invert_forecasts():
    rng = np.random.default_rng(61)
    for _ in range(40):
        t = rng.uniform(1e-3, 1e18)
        nu = rng.uniform(1e9, 1e15)
        d = rng.uniform(1e-30, 1e-7)
        c = rng.uniform(1e-30, 1e-8)
        assert drift_bound_from_angle(angle_shift(t, nu, d), t, nu) == pytest.approx(d, rel=1e-12)
        assert diffusion_bound_from_decay(polarization_decay(t, nu, c), t, nu) == pytest.approx(c, rel=1e-12)


# ------------------------------------------------------------------ stokes


def test_stokes_angles():
    assert stokes_angle(StokesLinear(1.0, 0.0)) == (0.0, 1.0)
    phi, p = stokes_angle(StokesLinear(0.0, 1.0))
    assert phi == pytest.approx(0.5 * math.pi)
    assert p == 1.0
    phi, p = stokes_angle(StokesLinear(3.0, 4.0))
    assert p == 5.0
    assert phi == pytest.approx(math.atan2(4.0, 3.0))
    with pytest.raises(DomainError):
        stokes_angle(StokesLinear(0.0, 0.0))


# ------------------------------------------------------------ equivariance


def test_valid_model_is_rotation_equivariant():
    model = _constant_model()
    rho0 = CircleDensity.wrapped_gaussian(mean=1.0, sigma=0.5, modes=64)
    dev = equivariance_check(model, rho0, rotation=0.9, lambda_span=0.5)
    assert dev <= 1e-9


def test_zero_span_gives_zero_deviation():
    model = _constant_model()
    rho0 = CircleDensity.wrapped_gaussian(mean=0.0, sigma=0.5, modes=64)
    assert equivariance_check(model, rho0, rotation=1.2, lambda_span=0.0) == 0.0


def test_azimuth_dependent_injection_breaks_equivariance():
    model = _constant_model()
    rho0 = CircleDensity.wrapped_gaussian(mean=1.0, sigma=0.5, modes=64)
    dev = equivariance_check(
        model, rho0, rotation=0.9, lambda_span=0.5,
        coefficient_samplers=(lambda b: 0.05 * (1.0 + 0.5 * math.cos(b)), lambda b: 0.3),
    )
    assert dev > 1e-4


def test_model_validation_rejects_bad_tensors():
    with pytest.raises(DomainError):
        BlochTensorModel(
            k_tensor=lambda th: np.array([[1.0, 0.2], [0.0, 1.0]]),  # asymmetric
            u_vector=lambda th: np.zeros(2),
            density_of_states=lambda th: 1.0,
        ).validate()
    with pytest.raises(DomainError):
        BlochTensorModel(
            k_tensor=lambda th: np.diag([1.0, -0.5]),  # not PSD
            u_vector=lambda th: np.zeros(2),
            density_of_states=lambda th: 1.0,
        ).validate()
    with pytest.raises(DomainError):
        BlochTensorModel(
            k_tensor=lambda th, phi: np.eye(2),  # azimuth argument: not polar-only
            u_vector=lambda th: np.zeros(2),
            density_of_states=lambda th: 1.0,
        ).validate()


def test_equator_params_extraction():
    params = _constant_model(c_diff=0.07, d_drift=-0.2).equator_params()
    assert params.c_diff == 0.07
    assert params.d_drift == -0.2
    with pytest.raises(DomainError):
        DiffusionParams(-1.0, 0.0)
