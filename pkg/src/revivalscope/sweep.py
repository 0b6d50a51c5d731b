"""Scenario assembly, time sweeps, snapshot dumps and CSV emission."""

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import bouncer, morse, squarewell
from .config import parse_bool, parse_int, parse_number
from .entropy import (ENTROPY_BOUND, TransformPlan, entropy_records,
                      resolve_workers)
from .errors import ConfigError, NumericalBreachError, RevivalScopeError
from .grids import MomentumGrid, SpatialGrid
from .packets import NORM_TOLERANCE, autocorrelation_batch, packet_norm
from .revivals import (find_extrema, match_revivals, moving_average,
                       relative_prominence_floor, smoothing_window)

CSV_HEADER = "t,t_over_Trev,abs_A2,S_rho,S_gamma,S_sum"
REPORT_HEADER = "t,t_over_Trev,kind,value,prominence,matched_p,matched_q,deviation"


@dataclass
class Scenario:
    """Everything a sweep needs, assembled from a ScenarioConfig."""

    kind: str
    packet: object
    plan: TransformPlan
    times: np.ndarray
    t_rev: float
    t_cl: float
    q_max: int
    tol: float
    min_prominence: float
    smoothing: bool
    out_dir: str


def _field(section, data, key, caster, default=None, **kw):
    if key not in data:
        if default is not None:
            return default
        raise ConfigError(f"{section}.{key}", "missing required value")
    try:
        return caster(data[key], f"{section}.{key}", **kw)
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{section}.{key}", str(exc)) from None


def _build_packet(cfg):
    sys_d, pk_d = cfg.system, cfg.packet
    renorm = _field("packet", pk_d, "renormalize", parse_bool, default=False)
    n_min = _field("system", sys_d, "n_min", parse_int)
    n_max = _field("system", sys_d, "n_max", parse_int)
    if cfg.kind == "square-well":
        params = squarewell.SquareWellParams(
            x0=_field("packet", pk_d, "x0", parse_number),
            p0=_field("packet", pk_d, "p0", parse_number, allow_pi=True),
            sigma=_field("packet", pk_d, "sigma", parse_number),
            L=_field("system", sys_d, "L", parse_number, default=1.0),
        )
        packet = squarewell.make_packet(params, n_min, n_max, renormalize=renorm)
        t_cl, t_rev = squarewell.sw_timescales(params, packet.dominant_index())
    elif cfg.kind == "bouncer":
        params = bouncer.BouncerParams(
            z0=_field("packet", pk_d, "z0", parse_number),
            sigma=_field("packet", pk_d, "sigma", parse_number, default=1.0),
            p0=_field("packet", pk_d, "p0", parse_number, default=0.0),
        )
        packet = bouncer.make_packet(params, n_min, n_max, renormalize=renorm)
        t_cl, t_rev = bouncer.bouncer_timescales(params)
    else:
        params = morse.MorseParams(
            D=_field("system", cfg.system, "D", parse_number),
            beta=_field("system", cfg.system, "beta", parse_number),
            r0=_field("system", cfg.system, "r0", parse_number),
            mu=_field("system", cfg.system, "mu", parse_number),
            n0=_field("packet", pk_d, "n0", parse_int),
            sigma_n=_field("packet", pk_d, "sigma_n", parse_number),
        )
        packet = morse.make_packet(params, n_min, n_max, renormalize=renorm)
        t_cl, t_rev = morse.morse_timescales(params)
    return packet, params, t_cl, t_rev


def _analytic_momentum_grid(params):
    # covers both +-p0 Gaussian lobes down to ~1e-12 of the peak density
    p_span = abs(params.p0) + 12.0 / params.sigma
    return MomentumGrid(-p_span, p_span, 2 ** 14)


def build_scenario(cfg):
    try:
        packet, params, t_cl, t_rev = _build_packet(cfg)
    except ConfigError:
        raise
    except RevivalScopeError as exc:
        raise ConfigError(f"{cfg.kind}", str(exc)) from None

    grid = SpatialGrid(
        x_min=_field("grid", cfg.grid, "x_min", parse_number),
        x_max=_field("grid", cfg.grid, "x_max", parse_number),
        n_points=_field("grid", cfg.grid, "n_points", parse_int, default=4096),
    )
    pathway = str(cfg.grid.get("pathway", "fft")).strip()
    if pathway not in ("fft", "analytic"):
        raise ConfigError("grid.pathway", f"expected fft|analytic, got '{pathway}'")
    if pathway == "analytic" and cfg.kind != "square-well":
        raise ConfigError("grid.pathway",
                          "analytic momentum pathway exists only for square-well")
    plan = TransformPlan(
        spatial_grid=grid,
        t_rev=t_rev,
        zero_pad=_field("grid", cfg.grid, "zero_pad", parse_int, default=4),
        pathway=pathway,
        momentum_grid=_analytic_momentum_grid(params) if pathway == "analytic" else None,
    )

    n_samples = _field("time", cfg.time, "n_samples", parse_int, default=4096)
    if n_samples < 16:
        raise ConfigError("time.n_samples", f"need >= 16 samples, got {n_samples}")
    t_max = _field("time", cfg.time, "t_max_over_trev", parse_number, default=1.0)
    if t_max <= 0:
        raise ConfigError("time.t_max_over_trev", "must be positive")
    # endpoint-exclusive sampling keeps every even-q fraction of T_rev on
    # the grid (the inclusive grid puts T_rev/2 exactly between samples)
    times = np.arange(n_samples) * (t_max * t_rev / n_samples)

    return Scenario(
        kind=cfg.kind,
        packet=packet,
        plan=plan,
        times=times,
        t_rev=t_rev,
        t_cl=t_cl,
        q_max=_field("analysis", cfg.analysis, "q_max", parse_int, default=10),
        tol=_field("analysis", cfg.analysis, "tol", parse_number, default=0.005),
        min_prominence=_field("analysis", cfg.analysis, "min_prominence",
                              parse_number, default=0.02),
        smoothing=_field("analysis", cfg.analysis, "smoothing", parse_bool,
                         default=False),
        out_dir=str(cfg.output.get("dir", ".")),
    )


def check_packet_norm(packet):
    norm = packet_norm(packet)
    if not (1.0 - NORM_TOLERANCE <= norm <= 1.0 + 1e-9):
        raise NumericalBreachError("packet-norm", 0.0,
                                   f"sum |a_n|^2 = {norm:.8f}")
    return norm


def check_records(records):
    for rec in records:
        if rec.autocorr_sq > 1.0 + 1e-9:
            raise NumericalBreachError("autocorrelation-unitarity", rec.t,
                                       f"|A|^2 = {rec.autocorr_sq:.12f}")
        if rec.s_sum < ENTROPY_BOUND - 1e-3:
            raise NumericalBreachError("entropy-bound", rec.t,
                                       f"S_sum = {rec.s_sum:.6f}")


def analyze_records(times, records, scenario):
    """Extrema of the (optionally smoothed) S_sum and |A|^2 series matched
    against Farey fractions; one combined report."""
    s_sum = np.array([r.s_sum for r in records])
    abs_a2 = np.array([r.autocorr_sq for r in records])
    if scenario.smoothing and len(times) > 2:
        window = smoothing_window(scenario.t_cl, float(times[1] - times[0]))
        s_sum = moving_average(s_sum, window)
        abs_a2 = moving_average(abs_a2, window)
    minima = find_extrema(times, s_sum, "min",
                          relative_prominence_floor(s_sum, scenario.min_prominence))
    maxima = find_extrema(times, abs_a2, "max",
                          relative_prominence_floor(abs_a2, scenario.min_prominence))
    return match_revivals(minima + maxima, scenario.t_rev,
                          scenario.q_max, scenario.tol)


def write_timeseries(path, records):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in records:
            fh.write("%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n" % (
                r.t, r.t_over_trev, r.autocorr_sq, r.s_rho, r.s_gamma, r.s_sum))


def write_report(path, report):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(REPORT_HEADER + "\n")
        for row in report.rows:
            if row.matched is None:
                tail = ",,,"
                fh.write("%.12e,%.12e,%s,%.12e,%.12e%s\n" % (
                    row.t, row.t_over_trev, row.kind, row.value,
                    row.prominence, tail))
            else:
                fh.write("%.12e,%.12e,%s,%.12e,%.12e,%d,%d,%.12e\n" % (
                    row.t, row.t_over_trev, row.kind, row.value,
                    row.prominence, row.matched[0], row.matched[1],
                    row.deviation))


@dataclass
class SweepResult:
    records: list
    report: object
    csv_path: str
    report_path: str
    diagnostics: object = None
    scenario: object = None


def run_sweep(cfg, out_dir=None, workers=None, diagnostics=False):
    """Full pipeline: build, propagate, analyze, write timeseries.csv and
    revivals.csv; deterministic for a fixed configuration."""
    scenario = build_scenario(cfg)
    out = out_dir if out_dir is not None else scenario.out_dir
    os.makedirs(out, exist_ok=True)
    check_packet_norm(scenario.packet)
    result = entropy_records(scenario.packet, scenario.plan, scenario.times,
                             workers=resolve_workers(workers),
                             diagnostics=diagnostics)
    records, diag = result if diagnostics else (result, None)
    check_records(records)
    report = analyze_records(scenario.times, records, scenario)
    csv_path = os.path.join(out, "timeseries.csv")
    report_path = os.path.join(out, "revivals.csv")
    write_timeseries(csv_path, records)
    write_report(report_path, report)
    return SweepResult(records, report, csv_path, report_path,
                       diagnostics=diag, scenario=scenario)


def run_snapshots(cfg, fractions, out_dir=None):
    """Density snapshots rho(x, p T_rev / q) written one CSV per fraction."""
    from .packets import evolve_position

    scenario = build_scenario(cfg)
    out = out_dir if out_dir is not None else scenario.out_dir
    os.makedirs(out, exist_ok=True)
    check_packet_norm(scenario.packet)
    paths = []
    for frac in fractions:
        frac = Fraction(frac)
        if not 0 < frac <= 1:
            raise ConfigError("fractions", f"{frac} outside (0, 1]")
        t = float(frac) * scenario.t_rev
        a2 = float(np.abs(autocorrelation_batch(scenario.packet, [t])[0]) ** 2)
        if a2 > 1.0 + 1e-9:
            raise NumericalBreachError("autocorrelation-unitarity", t,
                                       f"|A|^2 = {a2:.12f}")
        fld = evolve_position(scenario.packet, scenario.plan.spatial_grid, t)
        rho = np.abs(fld.values) ** 2
        path = os.path.join(out, f"snapshot_{frac.numerator}_{frac.denominator}.csv")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("x,rho\n")
            for x, r in zip(scenario.plan.spatial_grid.points, rho):
                fh.write("%.12e,%.12e\n" % (x, r))
        paths.append(path)
    return paths
