"""Independent finite-difference oracle for the equator drift-diffusion equation.

Explicit Euler in lambda on a periodic grid: central second difference for
the diffusion term, first-order upwind difference for the drift term, with
a CFL-limited step.  Deliberately shares no code with the spectral solver.
"""

import functools

import numpy as np

from relqopt.diffusion import CircleDensity, DiffusionParams, evolve_equator


def evolve_fd(v0, c_diff, d_drift, lambda_span):
    v = np.asarray(v0, dtype=float).copy()
    n = v.size
    h = 2.0 * np.pi / n
    limits = []
    if c_diff > 0.0:
        limits.append(h * h / (2.0 * c_diff))
    if d_drift != 0.0:
        limits.append(h / abs(d_drift))
    if not limits:
        return v
    dt_max = 0.4 * min(limits)
    steps = max(1, int(np.ceil(lambda_span / dt_max)))
    dt = lambda_span / steps
    for _ in range(steps):
        lap = (np.roll(v, -1) - 2.0 * v + np.roll(v, 1)) / (h * h)
        if d_drift >= 0.0:
            adv = (v - np.roll(v, 1)) / h
        else:
            adv = (np.roll(v, -1) - v) / h
        v = v + dt * (c_diff * lap - d_drift * adv)
    return v


@functools.lru_cache(maxsize=1)
def gaussian_l1_difference():
    """L1 distance between the spectral solution and the oracle (shared case)."""
    n = 4096
    c_diff, d_drift, lam = 0.1, 0.02, 0.3
    rho0 = CircleDensity.wrapped_gaussian(mean=1.0, sigma=0.35, modes=512)
    v0 = rho0.to_grid(n, clamp=False)
    spectral = evolve_equator(rho0, DiffusionParams(c_diff, d_drift), lam).to_grid(n, clamp=False)
    fd = evolve_fd(v0, c_diff, d_drift, lam)
    h = 2.0 * np.pi / n
    return float(np.sum(np.abs(spectral - fd)) * h)
