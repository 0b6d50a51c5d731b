"""Fractional revival detection: local extrema of the entropy sum (minima)
and |A(t)|^2 (maxima), ranked by topographic prominence and matched to
Farey fractions p/q of the revival time."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import DataError, ParameterError


def farey_fractions(q_max):
    """All reduced p/q in (0, 1] with q <= q_max, ascending."""
    if q_max < 2:
        raise ParameterError(f"q_max={q_max} must be >= 2")
    fractions = {Fraction(1, 1)}
    for q in range(2, q_max + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                fractions.add(Fraction(p, q))
    return sorted(fractions)


@dataclass(frozen=True)
class Extremum:
    index: int
    t: float
    value: float
    prominence: float
    kind: str  # "entropy-min" | "autocorr-max"


def _prominences(series, indices):
    """Topographic prominence of each strict local minimum of `series`.

    On each side, walk to the first sample below the minimum; the barrier
    is the highest sample passed.  A side that reaches the array edge
    without finding a lower sample contributes no barrier; with no barrier
    at all (global minimum) the prominence is the series maximum minus the
    minimum value.
    """
    gmax = series.max()
    out = np.empty(len(indices))
    for k, i in enumerate(indices):
        v = series[i]
        barriers = []
        for step in (-1, 1):
            j = i + step
            highest = -np.inf
            found = None
            while 0 <= j < len(series):
                if series[j] > highest:
                    highest = series[j]
                if series[j] < v:
                    found = highest
                    break
                j += step
            if found is not None:
                barriers.append(found)
        out[k] = min(b - v for b in barriers) if barriers else gmax - v
    return out


def find_extrema(times, values, kind="min", min_prominence=0.0):
    """Strict local extrema with prominence >= min_prominence.

    `times` must be strictly increasing with at least 3 samples;
    `min_prominence` is an absolute threshold in the units of `values`.
    """
    times = np.asarray(times, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    if len(times) != len(values):
        raise DataError("times and values must have equal length")
    if len(times) < 3:
        raise DataError("need at least 3 samples to detect extrema")
    if np.any(np.diff(times) <= 0):
        raise DataError("series must be sorted by strictly increasing t")
    if kind not in ("min", "max"):
        raise DataError(f"unknown extremum kind '{kind}'")

    s = values if kind == "min" else -values
    interior = np.arange(1, len(s) - 1)
    strict = (s[interior] < s[interior - 1]) & (s[interior] < s[interior + 1])
    idx = interior[strict]
    proms = _prominences(s, idx)
    label = "entropy-min" if kind == "min" else "autocorr-max"
    return [
        Extremum(int(i), float(times[i]), float(values[i]), float(p), label)
        for i, p in zip(idx, proms)
        if p >= min_prominence
    ]


def relative_prominence_floor(values, fraction=0.02):
    """Default qualification threshold: `fraction` of the full range."""
    values = np.asarray(values, dtype=np.float64)
    return fraction * float(values.max() - values.min())


@dataclass(frozen=True)
class RevivalRow:
    t: float
    t_over_trev: float
    kind: str
    value: float
    prominence: float
    matched: tuple | None  # (p, q) or None
    deviation: float | None


@dataclass(frozen=True)
class RevivalReport:
    t_rev: float
    q_max: int
    tol: float
    rows: tuple

    def matched_fractions(self, kind=None):
        out = set()
        for row in self.rows:
            if row.matched is not None and (kind is None or row.kind == kind):
                out.add(row.matched)
        return out


def match_revivals(extrema, t_rev, q_max, tol):
    """Match each extremum to the nearest Farey fraction of T_rev within
    `tol` (in units of t/T_rev); ties prefer the smaller denominator."""
    if t_rev <= 0:
        raise ParameterError(f"T_rev={t_rev} must be positive")
    if tol <= 0:
        raise ParameterError(f"tol={tol} must be positive")
    grid = farey_fractions(q_max)
    rows = []
    for ext in sorted(extrema, key=lambda e: e.t):
        theta = ext.t / t_rev
        best = None
        best_dev = None
        for frac in grid:
            dev = abs(theta - float(frac))
            if best is None or dev < best_dev - 1e-15 or (
                abs(dev - best_dev) <= 1e-15 and frac.denominator < best.denominator
            ):
                best, best_dev = frac, dev
        if best_dev <= tol:
            matched = (best.numerator, best.denominator)
            deviation = float(best_dev)
        else:
            matched, deviation = None, None
        rows.append(
            RevivalRow(ext.t, theta, ext.kind, ext.value, ext.prominence,
                       matched, deviation)
        )
    return RevivalReport(t_rev, q_max, tol, tuple(rows))


def moving_average(values, window):
    """Centered moving average; edge samples average over the part of the
    window that exists (no zero padding artifacts)."""
    values = np.asarray(values, dtype=np.float64)
    if window <= 1:
        return values.copy()
    half = window // 2
    csum = np.cumsum(np.insert(values, 0, 0.0))
    n = len(values)
    lo = np.maximum(np.arange(n) - half, 0)
    hi = np.minimum(np.arange(n) + half + 1, n)
    return (csum[hi] - csum[lo]) / (hi - lo)


def smoothing_window(t_cl, dt):
    """Window of one classical period in samples, forced odd, >= 1."""
    if t_cl is None or t_cl <= 0 or dt <= 0:
        return 1
    w = int(round(t_cl / dt))
    if w % 2 == 0:
        w += 1
    return max(w, 1)
