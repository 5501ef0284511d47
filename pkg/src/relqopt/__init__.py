"""Quantitative estimates for relativistic quantum-optics experiments in orbit.

Subpackage map: `kinematics` (intervals, simultaneity, timing), `wigner`
(little-group phases and helicity states), `gravitomagnetism` (frame-dragging
polarization rotation), `interferometry` (COW phases, redshift),
`qft_effects` (Unruh, Berry, vacuum negativity, event operators),
`diffusion` (Lorentz-invariant polarization diffusion), `bell` (CHSH
statistics and Monte Carlo), `orbits` (Keplerian geometry), `scenario`
(config files and effect reports), `cli` (command-line front end).
"""

from . import (
    bell,
    constants,
    diffusion,
    gravitomagnetism,
    interferometry,
    kinematics,
    orbits,
    qft_effects,
    scenario,
    wigner,
)
from .errors import ConfigurationError, DomainError, EffectError, NumericFailure

__version__ = "0.1.0"

__all__ = [
    "bell",
    "constants",
    "diffusion",
    "gravitomagnetism",
    "interferometry",
    "kinematics",
    "orbits",
    "qft_effects",
    "scenario",
    "wigner",
    "ConfigurationError",
    "DomainError",
    "EffectError",
    "NumericFailure",
    "__version__",
]
