"""Command-line front end.

Subcommands: `report` (full effect table for a scenario), `bell-sim`
(CHSH Monte Carlo), `diffusion` and `wigner` (single-group evaluations),
`orbit` (ephemeris samples), `curves` (plot-ready data).  Exit codes:
0 success, 2 configuration problem, 3 numeric failure.

Output is an aligned table by default or RFC-4180-style CSV (LF line
endings, '.' decimal separator, 17 significant digits) with --format csv.
Angles are degrees on the command line, matching scenario files.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import numpy as np

from . import bell, diffusion, kinematics, orbits, qft_effects, wigner
from . import scenario as scen
from .constants import C_LIGHT
from .errors import ConfigurationError, DomainError, EffectError, NumericFailure


def _fmt_full(x: float) -> str:
    return format(float(x), ".17g")


def _write_rows(rows, header, fmt: str, stream) -> None:
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([c if isinstance(c, str) else _fmt_full(c) for c in row])
        return
    cells = [list(header)]
    for row in rows:
        cells.append([c if isinstance(c, str) else format(float(c), ".9g") for c in row])
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    for r in cells:
        stream.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        stream.write("\n")


_EFFECT_HEADER = ("effect", "value", "unit", "paper_ref")


def _effect_rows(entries):
    return [(e.effect, e.value, e.unit, e.paper_ref) for e in entries]


def _load_scenario(args) -> scen.Scenario:
    if getattr(args, "scenario", None):
        s = scen.load_scenario(args.scenario)
    else:
        s = scen.Scenario()
    seed = getattr(args, "seed", None)
    if seed is not None and not 0 <= seed < 2**64:
        raise ConfigurationError("seed must fit in an unsigned 64-bit integer")
    workers = getattr(args, "workers", None)
    if workers is not None and workers < 1:
        raise ConfigurationError("workers must be >= 1")
    return scen.with_overrides(s, seed=seed, workers=workers)


def _parse_effects(raw: str | None):
    if raw is None:
        return None
    groups = [g.strip() for g in raw.split(",") if g.strip()]
    if not groups:
        raise ConfigurationError("--effects list is empty")
    return frozenset(groups)


def _cmd_report(args, stream) -> int:
    s = _load_scenario(args)
    report = scen.run_report(s, effects=_parse_effects(args.effects))
    _write_rows(_effect_rows(report.entries), _EFFECT_HEADER, args.format, stream)
    return 0


def _cmd_bell_sim(args, stream) -> int:
    s = _load_scenario(args)
    n = args.photons if args.photons is not None else s.photon_budget
    if n < 1:
        raise ConfigurationError("photons must be >= 1")
    try:
        n_req = bell.required_photons(s.visibility)
        counts = bell.simulate_coincidences(
            s.visibility, n, seed=s.seed, workers=s.workers)
        result = bell.chsh_estimate(counts)
    except (ArithmeticError, ValueError) as exc:
        raise EffectError("bell", str(exc)) from exc
    rows = [
        ("bell.visibility", s.visibility, "dimensionless", "§8.1"),
        ("bell.photon_budget", float(n), "count", "§8.1"),
        ("bell.required_photons", float(n_req), "count", "§8.1 Eq. (29)"),
        ("bell.seed", float(s.seed), "dimensionless", "§8.1"),
        ("bell.workers", float(s.workers), "dimensionless", "§8.1"),
        ("bell.simulated_s", result.s_value, "dimensionless", "§8.1"),
        ("bell.sigma", result.sigma, "dimensionless", "§8.1"),
        ("bell.n_sigma_violation", result.n_sigma_violation, "dimensionless", "§8.1"),
    ]
    _write_rows(rows, _EFFECT_HEADER, args.format, stream)
    if args.counts_out:
        with open(args.counts_out, "w", encoding="utf-8", newline="") as fh:
            bell.write_counts_csv(counts, fh)
    return 0


def _cmd_diffusion(args, stream) -> int:
    s = _load_scenario(args)
    report = scen.run_report(s, effects=frozenset({"diffusion"}))
    nu = C_LIGHT / s.wavelength
    t = kinematics.light_travel_time(s.separation_m())
    try:
        lam = diffusion.affine_parameter(t, nu)
    except (ArithmeticError, ValueError) as exc:
        raise EffectError("diffusion", str(exc)) from exc
    rows = [("diffusion.affine_parameter", lam, "s/J", "§5.2")]
    rows.extend(_effect_rows(report.entries))
    _write_rows(rows, _EFFECT_HEADER, args.format, stream)
    return 0


def _cmd_wigner(args, stream) -> int:
    s = _load_scenario(args)
    if args.beta is not None:
        beta = args.beta
        v = beta * C_LIGHT
    else:
        v = orbits.propagate(s.orbit_spec(), 0.0).speed
        beta = v / C_LIGHT
    theta = math.radians(args.theta)
    phi = math.radians(args.phi)
    theta_b = math.radians(args.theta_b)
    phi_b = math.radians(args.phi_b)
    try:
        khat = np.array([
            math.sin(theta) * math.cos(phi),
            math.sin(theta) * math.sin(phi),
            math.cos(theta),
        ])
        nhat = np.array([
            math.sin(theta_b) * math.cos(phi_b),
            math.sin(theta_b) * math.sin(phi_b),
            math.cos(theta_b),
        ])
        lam = wigner.LorentzMatrix.boost(tuple(beta * nhat))
        exact = wigner.wigner_angle(lam, wigner.FourMomentum(1.0, tuple(khat)))
        first = wigner.first_order_boost_phase(theta, phi, theta_b, phi_b, v)
        ratio = wigner.diffraction_transform(1.0, s.relative_speed)
    except (ArithmeticError, ValueError) as exc:
        raise EffectError("wigner", str(exc)) from exc
    rows = [
        ("wigner.beta", beta, "dimensionless", "§3.1.1"),
        ("wigner.exact_angle", exact, "rad", "§3.1.1"),
        ("wigner.first_order_phase", first, "rad", "§3.1.1 Eq. (13)"),
        ("wigner.diffraction_ratio", ratio, "dimensionless", "§3.1.1"),
    ]
    _write_rows(rows, _EFFECT_HEADER, args.format, stream)
    return 0


def _cmd_orbit(args, stream) -> int:
    s = _load_scenario(args)
    spec = s.orbit_spec()
    if args.samples < 2:
        raise ConfigurationError("samples must be >= 2")
    duration = args.duration if args.duration is not None else spec.period()
    if duration <= 0:
        raise ConfigurationError("duration must be positive")
    header = ["t", "x", "y", "z", "vx", "vy", "vz"]
    track_station = bool(s.stations)
    if track_station:
        header += ["range", "range_rate"]
    rows = []
    try:
        for t in np.linspace(0.0, duration, args.samples):
            state = orbits.propagate(spec, float(t))
            row = [state.time, *state.position, *state.velocity]
            if track_station:
                gs = orbits.station_state(s.stations[0], float(t))
                rng, rate, _ = orbits.relative_geometry(state, gs)
                row += [rng, rate]
            rows.append(tuple(row))
    except (ArithmeticError, ValueError) as exc:
        raise EffectError("orbit", str(exc)) from exc
    _write_rows(rows, header, args.format, stream)
    return 0


def _cmd_curves(args, stream) -> int:
    s = _load_scenario(args)
    if args.which == "photons":
        if not args.v_min > bell.V_MIN:
            raise ConfigurationError("v_min must exceed 1/sqrt(2)")
        if not args.v_min <= args.v_max <= 1.0:
            raise ConfigurationError("need v_min <= v_max <= 1")
        vs = np.linspace(args.v_min, args.v_max, args.points)
        if args.format == "csv":
            try:
                bell.write_photon_curve_csv(vs, stream)
            except (ArithmeticError, ValueError) as exc:
                raise EffectError("bell", str(exc)) from exc
            return 0
        rows = [(float(v), float(bell.required_photons(float(v)))) for v in vs]
        _write_rows(rows, ("V", "N"), args.format, stream)
        return 0
    # Ralph correlation vs proper-time differential
    model = qft_effects.EventOperatorModel(detector_resolution=s.detector_resolution)
    d_max = args.delta_max if args.delta_max is not None else 6.0 * s.detector_resolution
    if d_max <= 0:
        raise ConfigurationError("delta_max must be positive")
    rows = []
    try:
        for delta in np.linspace(0.0, d_max, args.points):
            rows.append((float(delta),
                         qft_effects.ralph_correlation(model, float(delta))))
    except (ArithmeticError, ValueError) as exc:
        raise EffectError("qft", str(exc)) from exc
    _write_rows(rows, ("delta", "C"), args.format, stream)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", metavar="PATH", default=None,
                        help="scenario file (defaults apply when omitted)")
    common.add_argument("--format", choices=("table", "csv"), default="table")
    common.add_argument("--seed", type=int, default=None,
                        help="override the Monte Carlo seed (unsigned 64-bit)")
    common.add_argument("--workers", type=int, default=None,
                        help="override the number of Monte Carlo streams")

    parser = argparse.ArgumentParser(
        prog="relqopt",
        description="Quantitative effect estimates for satellite quantum links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", parents=[common],
                       help="evaluate every enabled effect group")
    p.add_argument("--effects", default=None,
                   help="comma-separated group filter (e.g. geometry,bell)")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("bell-sim", parents=[common],
                       help="CHSH Monte Carlo with Poisson error propagation")
    p.add_argument("--photons", type=int, default=None,
                   help="total pair budget (default: scenario photon_budget)")
    p.add_argument("--counts-out", metavar="PATH", default=None,
                   help="also write the per-setting counts table as CSV")
    p.set_defaults(func=_cmd_bell_sim)

    p = sub.add_parser("diffusion", parents=[common],
                       help="polarization-diffusion forecasts")
    p.set_defaults(func=_cmd_diffusion)

    p = sub.add_parser("wigner", parents=[common],
                       help="exact and first-order little-group angles")
    p.add_argument("--theta", type=float, default=90.0,
                   help="photon polar angle, degrees (default 90)")
    p.add_argument("--phi", type=float, default=90.0,
                   help="photon azimuth, degrees (default 90)")
    p.add_argument("--theta-b", type=float, default=90.0,
                   help="boost polar angle, degrees (default 90)")
    p.add_argument("--phi-b", type=float, default=0.0,
                   help="boost azimuth, degrees (default 0)")
    p.add_argument("--beta", type=float, default=None,
                   help="boost speed v/c (default: orbital speed at epoch)")
    p.set_defaults(func=_cmd_wigner)

    p = sub.add_parser("orbit", parents=[common],
                       help="sampled satellite ephemeris (and station range)")
    p.add_argument("--duration", type=float, default=None,
                   help="time span in seconds (default: one period)")
    p.add_argument("--samples", type=int, default=101)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("curves", parents=[common], help="plot-ready data tables")
    p.add_argument("--which", choices=("photons", "ralph"), default="photons")
    p.add_argument("--points", type=int, default=57)
    p.add_argument("--v-min", type=float, default=0.72)
    p.add_argument("--v-max", type=float, default=1.0)
    p.add_argument("--delta-max", type=float, default=None,
                   help="largest proper-time differential, seconds")
    p.set_defaults(func=_cmd_curves)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, sys.stdout)
    except EffectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ConfigurationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NumericFailure, OverflowError) as exc:
        print(f"error: numeric failure: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())
