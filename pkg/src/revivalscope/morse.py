"""Morse oscillator eigenbasis for diatomic vibrations (HI parameters in
atomic units; coordinate x = r/r0 - 1).

Bound states psi_n ~ e^{-xi/2} xi^{s_n/2} L_n^{s_n}(xi) with
xi = 2 lambda e^{-beta x} and s_n = 2(lambda - n - 1/2); eigenfunctions
are normalized numerically on a per-state window that auto-widens until
the edge densities drop below 1e-12 of the peak (the weakly bound top
states reach far out in x).
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import IndexRangeError, ParameterError
from .packets import Eigenbasis, SpectralPacket, renormalized, truncate

EDGE_DENSITY_RATIO = 1e-12
NORM_POINTS = 2 ** 14 + 1


@dataclass(frozen=True)
class MorseParams:
    """Potential D(e^{-2 beta x} - 2 e^{-beta x}) plus the Gaussian level
    population center n0 and width sigma_n."""

    D: float
    beta: float
    r0: float
    mu: float
    n0: int = 0
    sigma_n: float = 1.0

    def __post_init__(self):
        for name in ("D", "beta", "r0", "mu"):
            if getattr(self, name) <= 0:
                raise ParameterError(f"{name}={getattr(self, name)} must be positive")
        lam = morse_lambda(self)
        if lam <= 0.5:
            raise ParameterError(f"lambda={lam} supports no bound state")
        if self.sigma_n <= 0:
            raise ParameterError(f"sigma_n={self.sigma_n} must be positive")
        if not 0 <= self.n0 <= int(lam - 0.5):
            raise ParameterError(
                f"n0={self.n0} outside the bound range [0, {int(lam - 0.5)}]"
            )


def morse_lambda(params: MorseParams):
    """lambda = sqrt(2 mu D) r0 / beta (hbar = 1)."""
    return np.sqrt(2.0 * params.mu * params.D) * params.r0 / params.beta


def bound_state_count(params: MorseParams):
    """[lambda - 1/2] + 1 bound levels."""
    return int(morse_lambda(params) - 0.5) + 1


def morse_energy(n, params: MorseParams):
    """E_n = -D (lambda - n - 1/2)^2 / lambda^2 for bound n."""
    lam = morse_lambda(params)
    top = int(lam - 0.5)
    ns = np.asarray(n)
    if np.any(ns < 0) or np.any(ns > top):
        raise IndexRangeError(f"bound indices are 0..{top}")
    e = -params.D * (lam - ns - 0.5) ** 2 / lam ** 2
    return float(e) if np.isscalar(n) else e


def laguerre(n, s, xi):
    """Generalized Laguerre polynomial L_n^s(xi) via the three-term
    recurrence (k+1) L_{k+1} = (2k+1+s-xi) L_k - (k+s) L_{k-1}."""
    if n < 0:
        raise IndexRangeError("Laguerre degree must be >= 0")
    xs = np.asarray(xi, dtype=np.float64)
    if np.any(xs < 0):
        raise ParameterError("Laguerre argument must satisfy xi >= 0")
    vals = kernels.laguerre_values(int(n), float(s), np.atleast_1d(xs))
    return float(vals[0]) if (np.isscalar(xi) or xs.ndim == 0) else vals


def morse_population(params: MorseParams, n_range):
    """Real nonnegative c_n with |c_n|^2 ~ exp(-(n-n0)^2/sigma_n),
    normalized over the full bound set (the Gaussian exponent must be
    negative for normalizability)."""
    top = bound_state_count(params) - 1
    ns = np.asarray(n_range)
    if np.any(ns < 0) or np.any(ns > top):
        raise IndexRangeError(f"population indices must lie in 0..{top}")
    all_n = np.arange(top + 1)
    w = np.exp(-((all_n - params.n0) ** 2) / params.sigma_n)
    w /= w.sum()
    return np.sqrt(w[ns])


def morse_timescales(params: MorseParams):
    """(T_cl, T_rev) with T_rev = 2 pi lambda^2 / D and
    T_cl = T_rev / (2 lambda - 1), in atomic units."""
    lam = morse_lambda(params)
    t_rev = 2.0 * np.pi * lam ** 2 / params.D
    return t_rev / (2.0 * lam - 1.0), t_rev


class MorseBasis(Eigenbasis):
    system_kind = "morse"
    min_index = 0

    def __init__(self, params: MorseParams):
        self.params = params
        self._lambda = morse_lambda(params)
        self._norms = {}

    def max_index(self):
        return bound_state_count(self.params) - 1

    def energies(self, ns):
        return morse_energy(np.asarray(ns), self.params)

    def _log_envelope(self, n, x):
        s = 2.0 * (self._lambda - n - 0.5)
        xi = 2.0 * self._lambda * np.exp(-self.params.beta * np.asarray(x, float))
        return -xi / 2.0 + (s / 2.0) * np.log(xi), xi, s

    def _normalization(self, n):
        """(log offset, norm) on a window widened until both edge densities
        are below 1e-12 of the peak."""
        if n in self._norms:
            return self._norms[n]
        x_lo, x_hi = -0.9, 6.0
        while True:
            grid = np.linspace(x_lo, x_hi, NORM_POINTS)
            lnpre, xi, s = self._log_envelope(n, grid)
            offset = lnpre.max()
            psi = np.exp(lnpre - offset) * kernels.laguerre_values(int(n), s, xi)
            dens = psi * psi
            peak = dens.max()
            if dens[0] > EDGE_DENSITY_RATIO * peak and x_lo > -2.0:
                x_lo -= 0.2
                continue
            if dens[-1] > EDGE_DENSITY_RATIO * peak and x_hi < 400.0:
                x_hi *= 1.6
                continue
            break
        norm = np.sqrt(kernels.simpson_integral(dens, grid[1] - grid[0]))
        self._norms[n] = (offset, norm)
        return self._norms[n]

    def eval_state(self, n, x):
        offset, norm = self._normalization(n)
        lnpre, xi, s = self._log_envelope(n, x)
        vals = np.exp(lnpre - offset) * kernels.laguerre_values(int(n), s, np.atleast_1d(xi)) / norm
        return vals

    def eval_states(self, ns, x):
        return np.array([self.eval_state(int(n), x) for n in np.asarray(ns)])

    def domain(self):
        return (None, None)

    def timescales(self, n0=None):
        return morse_timescales(self.params)


def morse_eigenstate(n, x, params: MorseParams):
    """Unit-normalized bound eigenfunction psi_n(x)."""
    top = bound_state_count(params) - 1
    if not 0 <= n <= top:
        raise IndexRangeError(f"bound indices are 0..{top}")
    basis = MorseBasis(params)
    vals = basis.eval_state(n, np.atleast_1d(np.asarray(x, float)))
    return float(vals[0]) if np.isscalar(x) else vals


def make_packet(params: MorseParams, n_min=0, n_max=None, renormalize=True):
    basis = MorseBasis(params)
    if n_max is None:
        n_max = basis.max_index()
    ns = np.arange(n_min, n_max + 1)
    coeffs = morse_population(params, ns).astype(np.complex128)
    packet = truncate(SpectralPacket(basis, n_min, coeffs))
    if renormalize:
        packet = renormalized(packet)
    return packet
