"""Command-line front end.

    revivalscope run --preset NAME [--config FILE] [--out DIR]
    revivalscope snapshots --preset NAME --fractions 1/2,1/4 [--out DIR]
    revivalscope report --csv FILE --trev VALUE --qmax N --tol X

Exit codes: 0 success (all invariants hold), 2 invalid configuration,
3 numerical invariant breach.
"""

import argparse
import sys
from fractions import Fraction

import numpy as np

from .config import load_scenario
from .errors import ConfigError, NumericalBreachError, RevivalScopeError
from .revivals import (find_extrema, match_revivals, moving_average,
                       relative_prominence_floor)
from .sweep import REPORT_HEADER, run_snapshots, run_sweep, write_report


def _add_scenario_args(sub):
    sub.add_argument("--preset", help="compiled-in preset name")
    sub.add_argument("--config", help="config file overriding the preset")
    sub.add_argument("--out", help="output directory (default from config)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="revivalscope",
        description="Spectral wave-packet sweeps, entropy time series and "
                    "fractional-revival reports.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    run_p = subs.add_parser("run", help="time sweep: timeseries.csv + revivals.csv")
    _add_scenario_args(run_p)

    snap_p = subs.add_parser("snapshots", help="density snapshots at fractions of T_rev")
    _add_scenario_args(snap_p)
    snap_p.add_argument("--fractions", required=True,
                        help="comma-separated list like 1/2,1/4,1/7")

    rep_p = subs.add_parser("report", help="revival report from an existing CSV")
    rep_p.add_argument("--csv", required=True, help="timeseries.csv to analyze")
    rep_p.add_argument("--trev", required=True, type=float, help="revival time")
    rep_p.add_argument("--qmax", type=int, default=10)
    rep_p.add_argument("--tol", type=float, default=0.005)
    rep_p.add_argument("--min-prominence", type=float, default=0.02,
                       help="prominence floor as a fraction of the series range")
    rep_p.add_argument("--smooth-window", type=int, default=0,
                       help="centered moving-average window in samples (0 = off)")
    rep_p.add_argument("--out", help="report path (default: stdout)")
    return parser


def _parse_fractions(text):
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            out.append(Fraction(item))
        except (ValueError, ZeroDivisionError):
            raise ConfigError("fractions", f"bad fraction '{item}'") from None
    if not out:
        raise ConfigError("fractions", "empty fraction list")
    return out


def _cmd_run(args):
    cfg = load_scenario(args.preset, args.config)
    result = run_sweep(cfg, out_dir=args.out)
    print(f"wrote {result.csv_path}")
    print(f"wrote {result.report_path}")
    return 0


def _cmd_snapshots(args):
    cfg = load_scenario(args.preset, args.config)
    for path in run_snapshots(cfg, _parse_fractions(args.fractions),
                              out_dir=args.out):
        print(f"wrote {path}")
    return 0


def _cmd_report(args):
    try:
        data = np.genfromtxt(args.csv, delimiter=",", names=True)
    except OSError as exc:
        raise ConfigError("csv", f"cannot read '{args.csv}': {exc}") from None
    for col in ("t", "S_sum", "abs_A2"):
        if data.dtype.names is None or col not in data.dtype.names:
            raise ConfigError("csv", f"missing column '{col}'")
    times = np.atleast_1d(data["t"])
    s_sum = np.atleast_1d(data["S_sum"])
    abs_a2 = np.atleast_1d(data["abs_A2"])
    if args.smooth_window > 1:
        s_sum = moving_average(s_sum, args.smooth_window)
        abs_a2 = moving_average(abs_a2, args.smooth_window)
    minima = find_extrema(times, s_sum, "min",
                          relative_prominence_floor(s_sum, args.min_prominence))
    maxima = find_extrema(times, abs_a2, "max",
                          relative_prominence_floor(abs_a2, args.min_prominence))
    report = match_revivals(minima + maxima, args.trev, args.qmax, args.tol)
    if args.out:
        write_report(args.out, report)
        print(f"wrote {args.out}")
    else:
        print(REPORT_HEADER)
        for row in report.rows:
            matched = (f"{row.matched[0]},{row.matched[1]},{row.deviation:.6e}"
                       if row.matched else ",,")
            print(f"{row.t:.12e},{row.t_over_trev:.12e},{row.kind},"
                  f"{row.value:.12e},{row.prominence:.12e},{matched}")
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {"run": _cmd_run, "snapshots": _cmd_snapshots,
                "report": _cmd_report}
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NumericalBreachError as exc:
        print(f"numerical breach: {exc}", file=sys.stderr)
        return 3
    except RevivalScopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
