"""Photon little-group machinery: standard frames, Wigner angles, helicity phases.

Conventions
-----------
Four-vectors are (t, x, y, z) with metric diag(1, -1, -1, -1); photon momenta
are dimensionless, measured in units of a reference energy so the reference
null vector is k_R = (1, 0, 0, 1).  The standard frame for a direction
khat(theta, phi) is R(khat) = Rz(phi) Ry(theta), and the standard momentum
transform is L(k) = R(khat) Bz(u) with rapidity u = ln(energy).

For a transformation Lam, the little-group element W = L(Lam p)^-1 Lam L(p)
fixes k_R and factors uniquely as a null translation times a z-rotation,
W = S(a, b) Rz(xi); helicity amplitudes pick up exp(+/- i xi).

All boost constructors here are active: boost(beta) maps a particle at rest
to one moving with velocity beta.  For the passive picture (new frame moving
with +v nhat) use boost(-v nhat / c).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import C_LIGHT
from .errors import DomainError

ETA = np.diag([1.0, -1.0, -1.0, -1.0])
K_REF = np.array([1.0, 0.0, 0.0, 1.0])
_LORENTZ_TOL = 1e-10


def _embed(r3: np.ndarray) -> np.ndarray:
    m = np.eye(4)
    m[1:, 1:] = r3
    return m


class LorentzMatrix:
    """A proper orthochronous Lorentz transformation as a validated 4x4 array."""

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=float)
        if m.shape != (4, 4):
            raise DomainError("Lorentz matrix must be 4x4")
        if not np.all(np.isfinite(m)):
            raise DomainError("Lorentz matrix must be finite")
        if np.max(np.abs(m.T @ ETA @ m - ETA)) > _LORENTZ_TOL:
            raise DomainError("matrix does not preserve the metric")
        if abs(np.linalg.det(m) - 1.0) > _LORENTZ_TOL:
            raise DomainError("matrix must have determinant +1")
        if m[0, 0] < 1.0 - _LORENTZ_TOL:
            raise DomainError("matrix must be orthochronous")
        self.matrix = m

    @classmethod
    def identity(cls) -> "LorentzMatrix":
        return cls(np.eye(4))

    @classmethod
    def rotation(cls, axis, angle: float) -> "LorentzMatrix":
        """Active rotation by `angle` about the unit 3-vector `axis`."""
        n = np.asarray(axis, dtype=float)
        norm = np.linalg.norm(n)
        if norm == 0.0:
            raise DomainError("rotation axis must be nonzero")
        n = n / norm
        k = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
        r3 = np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)
        return cls(_embed(r3))

    @classmethod
    def rotation_z(cls, angle: float) -> "LorentzMatrix":
        return cls.rotation([0.0, 0.0, 1.0], angle)

    @classmethod
    def rotation_y(cls, angle: float) -> "LorentzMatrix":
        return cls.rotation([0.0, 1.0, 0.0], angle)

    @classmethod
    def boost_z(cls, rapidity: float) -> "LorentzMatrix":
        ch, sh = math.cosh(rapidity), math.sinh(rapidity)
        m = np.eye(4)
        m[0, 0] = m[3, 3] = ch
        m[0, 3] = m[3, 0] = sh
        return cls(m)

    @classmethod
    def boost(cls, beta_vec) -> "LorentzMatrix":
        """Active pure boost with velocity beta_vec (fractions of c)."""
        b = np.asarray(beta_vec, dtype=float)
        b2 = float(b @ b)
        if b2 >= 1.0:
            raise DomainError("|beta| must be < 1")
        if b2 == 0.0:
            return cls.identity()
        gamma = 1.0 / math.sqrt(1.0 - b2)
        m = np.eye(4)
        m[0, 0] = gamma
        m[0, 1:] = m[1:, 0] = gamma * b
        m[1:, 1:] += (gamma - 1.0) * np.outer(b, b) / b2
        return cls(m)

    def inverse(self) -> "LorentzMatrix":
        # metric transpose: exact inverse for any Lorentz matrix
        return LorentzMatrix(ETA @ self.matrix.T @ ETA)

    def __matmul__(self, other: "LorentzMatrix") -> "LorentzMatrix":
        return LorentzMatrix(self.matrix @ other.matrix)

    def apply(self, fourvec) -> np.ndarray:
        return self.matrix @ np.asarray(fourvec, dtype=float)


@dataclass(frozen=True)
class FourMomentum:
    """Null four-momentum (energy, 3-vector k) in reference-energy units."""

    energy: float
    k: tuple

    def __post_init__(self):
        kv = np.asarray(self.k, dtype=float)
        if kv.shape != (3,):
            raise DomainError("k must be a 3-vector")
        object.__setattr__(self, "k", tuple(float(v) for v in kv))
        if not (math.isfinite(self.energy) and self.energy > 0.0):
            raise DomainError("energy must be positive and finite")
        if abs(self.energy - float(np.linalg.norm(kv))) > 1e-12 * self.energy:
            raise DomainError("momentum is not null")

    @classmethod
    def from_array(cls, arr) -> "FourMomentum":
        a = np.asarray(arr, dtype=float)
        return cls(float(a[0]), tuple(a[1:4]))

    def as_array(self) -> np.ndarray:
        return np.array([self.energy, *self.k])

    @property
    def khat(self) -> np.ndarray:
        kv = np.asarray(self.k)
        return kv / np.linalg.norm(kv)


def direction_angles(khat) -> tuple[float, float]:
    """Polar/azimuth (theta, phi) of a unit direction; phi = 0 on the z-axis."""
    n = np.asarray(khat, dtype=float)
    theta = math.atan2(math.hypot(n[0], n[1]), n[2])
    phi = math.atan2(n[1], n[0]) if theta > 0.0 else 0.0
    return theta, phi


def standard_rotation(khat) -> LorentzMatrix:
    """R(khat) = Rz(phi) Ry(theta); carries the z-axis onto khat."""
    n = np.asarray(khat, dtype=float)
    norm = float(np.linalg.norm(n))
    if norm == 0.0:
        raise DomainError("direction must be nonzero")
    if abs(norm - 1.0) > 1e-12:
        raise DomainError("direction must be a unit vector")
    theta, phi = direction_angles(n / norm)
    return LorentzMatrix.rotation_z(phi) @ LorentzMatrix.rotation_y(theta)


def standard_transform(k: FourMomentum) -> LorentzMatrix:
    """L(k) = R(khat) Bz(ln energy); maps k_R to k."""
    return standard_rotation(k.khat) @ LorentzMatrix.boost_z(math.log(k.energy))


def _null_translation(a: float, b: float) -> np.ndarray:
    """exp(a A + b B) for the little-group null generators A, B."""
    z = 0.5 * (a * a + b * b)
    return np.array(
        [
            [1.0 + z, a, b, -z],
            [a, 1.0, 0.0, -a],
            [b, 0.0, 1.0, -b],
            [z, a, b, 1.0 - z],
        ]
    )


def wigner_angle(lam: LorentzMatrix, p: FourMomentum) -> float:
    """Little-group angle xi of W = L(Lam p)^-1 Lam L(p), in (-pi, pi].

    W is factored as S(a, b) Rz(xi); the null-translation part S is computed
    for the consistency check but not returned.  Helicity amplitudes
    transform as alpha_{+/-} -> exp(+/- i xi) alpha_{+/-}.
    """
    p_out = lam.apply(p.as_array())
    if p_out[0] <= 0.0:
        raise DomainError("transformed momentum must have positive energy")
    l_in = standard_transform(p)
    l_out = standard_transform(FourMomentum.from_array(p_out))
    w = l_out.inverse().matrix @ lam.matrix @ l_in.matrix
    if np.max(np.abs(w @ K_REF - K_REF)) > _LORENTZ_TOL:
        raise DomainError("decomposition is singular: W does not fix k_R")
    xi = math.atan2(w[2, 1], w[1, 1])
    if xi <= -math.pi:
        xi = math.pi
    a, b = w[1, 0], w[2, 0]
    rz = _embed(
        np.array(
            [
                [math.cos(xi), -math.sin(xi), 0.0],
                [math.sin(xi), math.cos(xi), 0.0],
                [0.0, 0.0, 1.0],
            ]
        )
    )
    if np.max(np.abs(w - _null_translation(a, b) @ rz)) > _LORENTZ_TOL:
        raise DomainError("decomposition is singular: residual too large")
    return xi


def first_order_boost_phase(
    theta: float, phi: float, theta_b: float, phi_b: float, v: float
) -> float:
    """First-order polarization rotation for a slow boost.

    chi = -(1/2) tan(theta/2) sin(theta_b) sin(phi - phi_b) (v/c) for a photon
    direction (theta, phi) and boost direction (theta_b, phi_b); valid for
    0 <= theta <= pi/2 (the upper edge is the finite tan(pi/4) limit).
    """
    if not 0.0 <= theta <= 0.5 * math.pi:
        raise DomainError("theta must lie in [0, pi/2]")
    if not 0.0 <= v < C_LIGHT:
        raise DomainError("v must satisfy 0 <= v < c")
    return (
        -0.5 * math.tan(0.5 * theta) * math.sin(theta_b)
        * math.sin(phi - phi_b) * (v / C_LIGHT)
    )


def diffraction_transform(theta: float, v: float) -> float:
    """Aberrated small diffraction angle theta' = theta sqrt((1+b)/(1-b)).

    b = v/c is signed: positive for emitter and detector approaching along
    the beam.  b = 0.6 doubles the angle.
    """
    beta = v / C_LIGHT
    if not -1.0 < beta < 1.0:
        raise DomainError("|v| must be < c")
    if theta < 0.0:
        raise DomainError("theta must be nonnegative")
    return theta * math.sqrt((1.0 + beta) / (1.0 - beta))


_NORM_TOL = 1e-12


@dataclass(frozen=True)
class HelicityState:
    """Single-photon helicity amplitudes (alpha_plus, alpha_minus), unit norm."""

    plus: complex
    minus: complex

    def __post_init__(self):
        n = abs(self.plus) ** 2 + abs(self.minus) ** 2
        if abs(n - 1.0) > _NORM_TOL:
            raise DomainError("helicity state must be normalized")


@dataclass(frozen=True)
class TwoPhotonState:
    """Amplitudes over the helicity product basis (++, +-, -+, --), unit norm."""

    amplitudes: tuple

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex)
        if a.shape != (4,):
            raise DomainError("need 4 amplitudes (++, +-, -+, --)")
        object.__setattr__(self, "amplitudes", tuple(complex(v) for v in a))
        if abs(float(np.sum(np.abs(a) ** 2)) - 1.0) > _NORM_TOL:
            raise DomainError("two-photon state must be normalized")

    def as_array(self) -> np.ndarray:
        return np.asarray(self.amplitudes, dtype=complex)


def apply_helicity_phase(state, chi: float, photon: int | None = None):
    """Multiply helicity amplitudes by exp(+/- i chi).

    For a TwoPhotonState, `photon` selects which photon (0 or 1) acquired the
    phase; call once per photon for a collective rotation.
    """
    if isinstance(state, HelicityState):
        ph = complex(math.cos(chi), math.sin(chi))
        return HelicityState(plus=state.plus * ph, minus=state.minus * ph.conjugate())
    if isinstance(state, TwoPhotonState):
        if photon not in (0, 1):
            raise DomainError("photon index must be 0 or 1")
        ph = complex(math.cos(chi), math.sin(chi))
        pp, pm, mp, mm = state.amplitudes
        if photon == 0:
            return TwoPhotonState((pp * ph, pm * ph, mp * ph.conjugate(), mm * ph.conjugate()))
        return TwoPhotonState((pp * ph, pm * ph.conjugate(), mp * ph, mm * ph.conjugate()))
    raise DomainError("state must be a HelicityState or TwoPhotonState")


def concurrence(state: TwoPhotonState) -> float:
    """C = 2 |a_pp a_mm - a_pm a_mp| for a pure two-photon state."""
    pp, pm, mp, mm = state.amplitudes
    return 2.0 * abs(pp * mm - pm * mp)


@dataclass(frozen=True)
class PolarizationTriad:
    """Right-handed orthonormal basis (eps1, eps2, khat) for linear polarization."""

    eps1: tuple
    eps2: tuple
    khat: tuple

    def __post_init__(self):
        e1 = np.asarray(self.eps1, dtype=float)
        e2 = np.asarray(self.eps2, dtype=float)
        k = np.asarray(self.khat, dtype=float)
        for name, v in (("eps1", e1), ("eps2", e2), ("khat", k)):
            if abs(float(np.linalg.norm(v)) - 1.0) > _NORM_TOL:
                raise DomainError(f"{name} must be a unit vector")
        if abs(float(e1 @ e2)) > _NORM_TOL or abs(float(e1 @ k)) > _NORM_TOL \
                or abs(float(e2 @ k)) > _NORM_TOL:
            raise DomainError("triad must be orthogonal")
        if np.max(np.abs(np.cross(e1, e2) - k)) > 1e-10:
            raise DomainError("triad must be right-handed (eps1 x eps2 = khat)")
        object.__setattr__(self, "eps1", tuple(float(v) for v in e1))
        object.__setattr__(self, "eps2", tuple(float(v) for v in e2))
        object.__setattr__(self, "khat", tuple(float(v) for v in k))


def standard_triad(khat) -> PolarizationTriad:
    """Linear-polarization basis carried from (x, y, z) by R(khat)."""
    r = standard_rotation(khat).matrix[1:, 1:]
    return PolarizationTriad(
        eps1=tuple(r @ np.array([1.0, 0.0, 0.0])),
        eps2=tuple(r @ np.array([0.0, 1.0, 0.0])),
        khat=tuple(r @ np.array([0.0, 0.0, 1.0])),
    )
