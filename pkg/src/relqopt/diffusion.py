"""Lorentz-invariant polarization diffusion restricted to the Bloch equator.

Linear polarization lives on the equator of the polarization sphere with
azimuth beta; boosts act there as rotations.  The invariant evolution is

    d rho / d lambda = cDiff d^2 rho / d beta^2 - dDrift d rho / d beta

solved spectrally: rho_m(lambda) = rho_m(0) exp(-cDiff m^2 lambda
- i m dDrift lambda).  Densities are stored as Fourier coefficients for
m >= 0 (negative m follow by conjugate symmetry).

The closed-form observables for a constant-frequency beam over coordinate
time t are the frame-angle shift chi = t dDrift / nu and the depolarization
exponent mu = 4 t cDiff / nu (degree of polarization P' = exp(-mu) P).
The factor bookkeeping between these reduced forms and the abstract affine
parameter lambda = t/(h nu) follows the printed conventions; only the
products c*lambda and d*lambda are ever used.
"""

from __future__ import annotations

import inspect
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constants import PLANCK_H
from .errors import DomainError

DEFAULT_MODES = 256
_GRID_FLOOR = -1e-9


class CircleDensity:
    """Probability density on the circle, stored spectrally (m = 0..modes)."""

    def __init__(self, coefficients):
        c = np.asarray(coefficients, dtype=complex).copy()
        if c.ndim != 1 or c.size < 1:
            raise DomainError("coefficients must be a 1-d array")
        if abs(c[0].imag) > 1e-12 or abs(2.0 * math.pi * c[0].real - 1.0) > 1e-9:
            raise DomainError("density must integrate to 1 (rho_0 = 1/2pi)")
        self.coefficients = c
        grid = self.to_grid(max(8, 4 * (c.size - 1)), clamp=False)
        if grid.min() < _GRID_FLOOR:
            raise DomainError("density is negative beyond tolerance")

    @property
    def modes(self) -> int:
        return self.coefficients.size - 1

    def coefficient(self, m: int) -> complex:
        """rho_m; negative m via conjugate symmetry, |m| > modes gives 0."""
        if abs(m) > self.modes:
            return 0.0 + 0.0j
        return complex(self.coefficients[m]) if m >= 0 else complex(np.conj(self.coefficients[-m]))

    @classmethod
    def uniform(cls, modes: int = DEFAULT_MODES) -> "CircleDensity":
        c = np.zeros(modes + 1, dtype=complex)
        c[0] = 1.0 / (2.0 * math.pi)
        return cls(c)

    @classmethod
    def wrapped_gaussian(cls, mean: float, sigma: float,
                         modes: int = DEFAULT_MODES) -> "CircleDensity":
        if sigma <= 0:
            raise DomainError("sigma must be positive")
        m = np.arange(modes + 1)
        c = np.exp(-0.5 * (m * sigma) ** 2) * np.exp(-1j * m * mean) / (2.0 * math.pi)
        return cls(c)

    @classmethod
    def from_grid(cls, values, modes: int = DEFAULT_MODES) -> "CircleDensity":
        """Build from samples on N uniform azimuth points (integral must be 1)."""
        v = np.asarray(values, dtype=float)
        if v.ndim != 1 or v.size < 4:
            raise DomainError("need at least 4 grid samples")
        if v.min() < _GRID_FLOOR:
            raise DomainError("grid density is negative beyond tolerance")
        if abs(2.0 * math.pi * v.mean() - 1.0) > 1e-9:
            raise DomainError("grid density must integrate to 1")
        m = min(modes, v.size // 2 - 1)
        return cls(np.fft.fft(v)[: m + 1] / v.size)

    def to_grid(self, n: int = 1024, clamp: bool = True) -> np.ndarray:
        """Evaluate on n uniform points; small negative ringing is clamped."""
        if n < 2 * self.modes + 2:
            raise DomainError("grid too coarse for the spectral content")
        spec = np.zeros(n // 2 + 1, dtype=complex)
        spec[: self.modes + 1] = self.coefficients * n
        v = np.fft.irfft(spec, n=n)
        if clamp:
            if v.min() < _GRID_FLOOR:
                raise DomainError("density is negative beyond tolerance")
            v = np.where(v < 0.0, 0.0, v)
            v *= 1.0 / (2.0 * math.pi * v.mean())
        return v

    def circular_mean(self) -> float:
        """Mean azimuth, arg <e^{i beta}>."""
        r = 2.0 * math.pi * np.conj(self.coefficient(1))
        if abs(r) == 0.0:
            raise DomainError("circular mean undefined for isotropic density")
        return math.atan2(r.imag, r.real)

    def resultant_length(self) -> float:
        """|<e^{i beta}>|, the m = 1 polarization observable."""
        return 2.0 * math.pi * abs(self.coefficient(1))


@dataclass(frozen=True)
class DiffusionParams:
    """Diffusion and drift constants of the invariant equator equation (s^-2)."""

    c_diff: float
    d_drift: float

    def __post_init__(self):
        if self.c_diff < 0:
            raise DomainError("c_diff must be nonnegative (anti-diffusion)")


def evolve_equator(rho0: CircleDensity, params: DiffusionParams,
                   lambda_span: float) -> CircleDensity:
    """Spectral evolution rho_m -> rho_m exp(-c m^2 L - i m d L)."""
    if lambda_span < 0:
        raise DomainError("lambda_span must be nonnegative")
    m = np.arange(rho0.modes + 1)
    factor = np.exp(
        -params.c_diff * m.astype(float) ** 2 * lambda_span
        - 1j * m * params.d_drift * lambda_span
    )
    return CircleDensity(rho0.coefficients * factor)


def affine_parameter(t: float, nu: float) -> float:
    """Invariant affine parameter lambda = t / (h nu) for coordinate time t."""
    if nu <= 0:
        raise DomainError("nu must be positive")
    return t / (PLANCK_H * nu)


def angle_shift(t: float, nu: float, d_drift: float) -> float:
    """Frame-angle drift chi = t dDrift / nu accumulated over time t."""
    if nu <= 0:
        raise DomainError("nu must be positive")
    return t * d_drift / nu


def polarization_decay(t: float, nu: float, c_diff: float) -> float:
    """Depolarization exponent mu = 4 t cDiff / nu (P' = exp(-mu) P)."""
    if nu <= 0:
        raise DomainError("nu must be positive")
    return 4.0 * t * c_diff / nu


def drift_bound_from_angle(chi: float, t: float, nu: float) -> float:
    """Invert chi = t d / nu: the drift constant saturating an angle bound."""
    if t <= 0 or nu <= 0:
        raise DomainError("t and nu must be positive")
    return chi * nu / t


def diffusion_bound_from_decay(mu: float, t: float, nu: float) -> float:
    """Invert mu = 4 t c / nu: the diffusion constant saturating a decay bound."""
    if t <= 0 or nu <= 0:
        raise DomainError("t and nu must be positive")
    return mu * nu / (4.0 * t)


@dataclass(frozen=True)
class StokesLinear:
    """Linear Stokes pair (Q, U)."""

    q_stokes: float
    u_stokes: float

    @property
    def degree(self) -> float:
        return math.hypot(self.q_stokes, self.u_stokes)


def stokes_angle(s: StokesLinear) -> tuple[float, float]:
    """(Phi, P) = (atan2(U, Q), sqrt(Q^2 + U^2)); undefined at Q = U = 0."""
    if s.q_stokes == 0.0 and s.u_stokes == 0.0:
        raise DomainError("polarization angle undefined for Q = U = 0")
    return math.atan2(s.u_stokes, s.q_stokes), s.degree


@dataclass(frozen=True)
class BlochTensorModel:
    """Polar-angle samplers for the general sphere model: K^{AB}(theta),
    u^A(theta), density of states n(theta).

    Validity demands symmetric PSD K, positive n, and polar-only dependence
    (samplers of a single argument) — azimuth dependence would break the
    rotational invariance the equivariance witness checks.
    """

    k_tensor: Callable[[float], np.ndarray]
    u_vector: Callable[[float], np.ndarray]
    density_of_states: Callable[[float], float]

    def validate(self, thetas=None) -> None:
        for name, fn in (
            ("k_tensor", self.k_tensor),
            ("u_vector", self.u_vector),
            ("density_of_states", self.density_of_states),
        ):
            params = [
                p for p in inspect.signature(fn).parameters.values()
                if p.kind in (p.POSITIONAL_ONLY, p.POSITIONAL_OR_KEYWORD)
            ]
            if len(params) != 1:
                raise DomainError(f"{name} must take exactly one polar-angle argument")
        if thetas is None:
            thetas = np.linspace(0.05, math.pi - 0.05, 17)
        for th in thetas:
            k = np.asarray(self.k_tensor(float(th)), dtype=float)
            if k.shape != (2, 2) or np.max(np.abs(k - k.T)) > 1e-12:
                raise DomainError("k_tensor must return a symmetric 2x2 tensor")
            if np.linalg.eigvalsh(k).min() < -1e-12:
                raise DomainError("k_tensor must be positive semidefinite")
            u = np.asarray(self.u_vector(float(th)), dtype=float)
            if u.shape != (2,):
                raise DomainError("u_vector must return a 2-vector")
            if not self.density_of_states(float(th)) > 0:
                raise DomainError("density_of_states must be positive")

    def equator_params(self) -> DiffusionParams:
        """Constant equator coefficients: c = K^{bb}(pi/2), d = u^b(pi/2)."""
        th = 0.5 * math.pi
        k = np.asarray(self.k_tensor(th), dtype=float)
        u = np.asarray(self.u_vector(th), dtype=float)
        return DiffusionParams(c_diff=float(k[1, 1]), d_drift=float(u[1]))


def _rotate_grid(values: np.ndarray, angle: float) -> np.ndarray:
    """rho(beta) -> rho(beta - angle) via spectral shift."""
    n = values.size
    spec = np.fft.rfft(values)
    m = np.arange(spec.size)
    return np.fft.irfft(spec * np.exp(-1j * m * angle), n=n)


def equivariance_check(
    model: BlochTensorModel,
    rho0: CircleDensity,
    rotation: float,
    lambda_span: float,
    grid_n: int = 256,
    coefficient_samplers=None,
) -> float:
    """L1 distance between rotate-then-evolve and evolve-then-rotate.

    For any valid (polar-only) model the equator dynamics has constant
    coefficients and commutes with rotations, so the deviation is numerical
    noise.  `coefficient_samplers` is a test hook: a pair of callables
    (c(beta), d(beta)) injecting azimuth-dependent coefficients, which breaks
    the symmetry and makes the deviation finite.
    """
    if lambda_span < 0:
        raise DomainError("lambda_span must be nonnegative")
    model.validate()
    v0 = rho0.to_grid(grid_n, clamp=False)
    h = 2.0 * math.pi / grid_n
    if lambda_span == 0.0:
        return 0.0
    beta = np.arange(grid_n) * h
    if coefficient_samplers is None:
        params = model.equator_params()
        c_arr = np.full(grid_n, params.c_diff)
        d_arr = np.full(grid_n, params.d_drift)
    else:
        c_fn, d_fn = coefficient_samplers
        c_arr = np.asarray([float(c_fn(b)) for b in beta])
        d_arr = np.asarray([float(d_fn(b)) for b in beta])
        if c_arr.min() < 0:
            raise DomainError("injected diffusion coefficient must be nonnegative")

    m_max = grid_n // 2
    ik = 1j * np.arange(m_max + 1)

    def d_beta(v):
        return np.fft.irfft(ik * np.fft.rfft(v), n=grid_n)

    def rhs(v):
        return d_beta(c_arr * d_beta(v) - d_arr * v)

    stiff = float(c_arr.max()) * m_max**2 + abs(d_arr).max() * m_max
    n_steps = max(64, int(lambda_span * stiff / 2.0) + 1)
    dt = lambda_span / n_steps

    def evolve(v):
        v = v.copy()
        for _ in range(n_steps):
            k1 = rhs(v)
            k2 = rhs(v + 0.5 * dt * k1)
            k3 = rhs(v + 0.5 * dt * k2)
            k4 = rhs(v + dt * k3)
            v = v + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        return v

    path_a = _rotate_grid(evolve(v0), rotation)
    path_b = evolve(_rotate_grid(v0, rotation))
    return float(np.sum(np.abs(path_a - path_b)) * h)
