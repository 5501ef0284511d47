"""Polarization transport in stationary gravitomagnetic fields.

The field enters through omega = B_g/2 (units 1/m when the affine parameter
is metres along the ray) and the gravitoelectric acceleration E_g.  A ray
carries a unit propagation direction khat and a unit linear-polarization
vector fhat; both precess with angular velocity Omega per unit affine
parameter:

    Omega = 2 omega - (omega . khat) khat - E_g x k

Closed-form rotation angles for rays through a spinning mass are provided
for the principal-null (radial) and transverse (impact-parameter) cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constants import C_LIGHT, GRAVITATIONAL_G
from .errors import DomainError

Vector = np.ndarray


@dataclass(frozen=True)
class GravField:
    """Field sample at a point: rotation vector omega (1/m) and E_g (1/m^2 scale)."""

    omega: tuple
    eg: tuple

    def __post_init__(self):
        for name in ("omega", "eg"):
            v = np.asarray(getattr(self, name), dtype=float)
            if v.shape != (3,) or not np.all(np.isfinite(v)):
                raise DomainError(f"{name} must be a finite 3-vector")
            object.__setattr__(self, name, tuple(float(x) for x in v))


@dataclass(frozen=True)
class RayState:
    """Ray snapshot: position (m), unit khat, unit fhat, affine parameter (m)."""

    position: tuple
    khat: tuple
    fhat: tuple
    lam: float = 0.0

    def __post_init__(self):
        pos = np.asarray(self.position, dtype=float)
        k = np.asarray(self.khat, dtype=float)
        f = np.asarray(self.fhat, dtype=float)
        if abs(np.linalg.norm(k) - 1.0) > 1e-9:
            raise DomainError("khat must be a unit vector")
        if abs(np.linalg.norm(f) - 1.0) > 1e-9:
            raise DomainError("fhat must be a unit vector")
        object.__setattr__(self, "position", tuple(float(v) for v in pos))
        object.__setattr__(self, "khat", tuple(float(v) for v in k))
        object.__setattr__(self, "fhat", tuple(float(v) for v in f))


@dataclass(frozen=True)
class SpinningBody:
    """Point spinning mass: M (kg), angular momentum J (kg m^2/s), spin axis."""

    mass: float
    angular_momentum: float
    spin_axis: tuple = (0.0, 0.0, 1.0)

    def __post_init__(self):
        if self.mass <= 0 or self.angular_momentum <= 0:
            raise DomainError("mass and angular momentum must be positive")
        ax = np.asarray(self.spin_axis, dtype=float)
        n = np.linalg.norm(ax)
        if n == 0:
            raise DomainError("spin axis must be nonzero")
        object.__setattr__(self, "spin_axis", tuple(float(v) for v in ax / n))


def rotation_rate(field: GravField, khat, k) -> Vector:
    """Omega = 2 omega - (omega . khat) khat - E_g x k (per unit affine length)."""
    kh = np.asarray(khat, dtype=float)
    if abs(np.linalg.norm(kh) - 1.0) > 1e-9:
        raise DomainError("khat must be a unit vector")
    om = np.asarray(field.omega)
    eg = np.asarray(field.eg)
    return 2.0 * om - float(om @ kh) * kh - np.cross(eg, np.asarray(k, dtype=float))


def phase_rate(field: GravField, khat, frame_term: float = 0.0) -> float:
    """dchi/dlambda = omega . khat plus a caller-supplied frame-rotation term."""
    kh = np.asarray(khat, dtype=float)
    return float(np.asarray(field.omega) @ kh) + frame_term


def transport_ray(
    state: RayState,
    sampler: Callable[[Vector], GravField],
    lam_end: float,
    steps: int,
) -> RayState:
    """RK4-transport khat and fhat along the ray from state.lam to lam_end.

    The position advances with dx/dlambda = khat so the sampler sees the
    spatial point; khat and fhat are renormalized after every step.
    """
    if steps < 1:
        raise DomainError("steps must be >= 1")
    h = (lam_end - state.lam) / steps
    pos = np.asarray(state.position, dtype=float)
    k = np.asarray(state.khat, dtype=float)
    f = np.asarray(state.fhat, dtype=float)

    def deriv(y):
        p, kh, fh = y[0:3], y[3:6], y[6:9]
        om = rotation_rate(sampler(p), kh / np.linalg.norm(kh), kh)
        return np.concatenate([kh, np.cross(om, kh), np.cross(om, fh)])

    y = np.concatenate([pos, k, f])
    for _ in range(steps):
        k1 = deriv(y)
        k2 = deriv(y + 0.5 * h * k1)
        k3 = deriv(y + 0.5 * h * k2)
        k4 = deriv(y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        y[3:6] /= np.linalg.norm(y[3:6])
        y[6:9] /= np.linalg.norm(y[6:9])
    return RayState(tuple(y[0:3]), tuple(y[3:6]), tuple(y[6:9]), lam_end)


def kerr_principal_null_rotation(
    body: SpinningBody, r1: float, r2: float, theta: float
) -> float:
    """Polarization rotation along a radial ray between radii r1 and r2.

    delta_chi = arcsin(-(J/(M c)) (1/r1 - 1/r2) cos(theta)); r2 may be inf.
    """
    if r1 <= 0 or r2 <= 0:
        raise DomainError("radii must be positive")
    inv1 = 1.0 / r1
    inv2 = 0.0 if math.isinf(r2) else 1.0 / r2
    x = -(body.angular_momentum / (body.mass * C_LIGHT)) * (inv1 - inv2) * math.cos(theta)
    if abs(x) > 1.0:
        raise DomainError("rotation argument exceeds 1; formula out of range")
    return math.asin(x)


def axial_impact_rotation(body: SpinningBody, s: float, antiparallel: bool = False) -> float:
    """Rotation for a ray passing a spinning mass at impact parameter s.

    chi = arcsin(4 G J / (s^2 c^3)) for propagation parallel to the spin;
    sign flips for antiparallel propagation.
    """
    if s <= 0:
        raise DomainError("impact parameter must be positive")
    x = 4.0 * GRAVITATIONAL_G * body.angular_momentum / (s * s * C_LIGHT**3)
    if x >= 1.0:
        raise DomainError("impact parameter too small; arcsin argument >= 1")
    chi = math.asin(x)
    return -chi if antiparallel else chi


def closed_path_rotation(body: SpinningBody, s1: float, s2: float) -> float:
    """Net rotation around a closed loop with legs at impact parameters s1, s2.

    delta_chi = (4 G J / c^3)(1/s1^2 - 1/s2^2); equal legs cancel exactly.
    """
    if s1 <= 0 or s2 <= 0:
        raise DomainError("impact parameters must be positive")
    coef = 4.0 * GRAVITATIONAL_G * body.angular_momentum / C_LIGHT**3
    return coef * (1.0 / (s1 * s1) - 1.0 / (s2 * s2))
