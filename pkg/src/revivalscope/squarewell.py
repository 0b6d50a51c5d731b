"""Infinite square well in units 2m = hbar = 1 (box length L, default 1).

Eigenfunctions u_n = sqrt(2/L) sin(n pi x / L) with E_n = (n pi / L)^2,
analytic momentum eigenstates, closed-form Gaussian expansion
coefficients, and the classical/revival time scales.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IndexRangeError, ParameterError
from .packets import Eigenbasis, SpectralPacket, packet_norm, renormalized, truncate

SINGULARITY_WINDOW = 1e-6  # |p -+ p_n| below this uses the analytic limit


@dataclass(frozen=True)
class SquareWellParams:
    """Initial Gaussian packet: |psi(x,0)|^2 ~ exp(-(x-x0)^2/sigma^2)
    modulated by exp(i p0 (x-x0))."""

    x0: float
    p0: float
    sigma: float
    L: float = 1.0

    def __post_init__(self):
        if self.L <= 0:
            raise ParameterError(f"L={self.L} must be positive")
        if not 0.0 < self.x0 < self.L:
            raise ParameterError(f"x0={self.x0} must lie strictly inside (0, {self.L})")
        if self.sigma <= 0:
            raise ParameterError(f"sigma={self.sigma} must be positive")

    @property
    def near_wall(self):
        """True when x0 +- 3 sigma spills outside the box; the closed-form
        coefficients are then only approximate."""
        return self.x0 - 3 * self.sigma < 0.0 or self.x0 + 3 * self.sigma > self.L


def sw_energy(n, L=1.0):
    """E_n = (n pi / L)^2 for n = 1, 2, 3, ..."""
    ns = np.asarray(n)
    if np.any(ns < 1):
        raise IndexRangeError("square-well index starts at n=1")
    e = (ns * np.pi / L) ** 2
    return float(e) if np.isscalar(n) else e


def sw_eval_u(n, x, L=1.0):
    """u_n(x) = sqrt(2/L) sin(n pi x / L) on [0, L]."""
    xs = np.asarray(x, dtype=np.float64)
    if np.any(xs < -1e-12) or np.any(xs > L + 1e-12):
        raise DomainError(f"x outside the box [0, {L}]")
    u = np.sqrt(2.0 / L) * np.sin(n * np.pi * xs / L)
    return float(u) if np.isscalar(x) else u


def sw_eval_phi(n, p, L=1.0):
    """Momentum eigenstate in the (2 pi)^(-1/2) Integral psi e^{-ipx} dx
    convention:

        phi_n(p) = sqrt(1/(pi L)) * p_n/(p^2 - p_n^2) * [(-1)^n e^{-ipL} - 1]

    with p_n = n pi / L; the removable singularities at p = +-p_n evaluate
    to -+(i/2) sqrt(L/pi).
    """
    ps = np.atleast_1d(np.asarray(p, dtype=np.float64))
    pn = n * np.pi / L
    out = np.empty(ps.shape, dtype=np.complex128)
    singular = np.abs(np.abs(ps) - pn) < SINGULARITY_WINDOW
    reg = ~singular
    num = (-1.0) ** n * np.exp(-1j * ps[reg] * L) - 1.0
    out[reg] = np.sqrt(1.0 / (np.pi * L)) * pn * num / (ps[reg] ** 2 - pn ** 2)
    limit = 0.5j * np.sqrt(L / np.pi)
    out[singular & (ps > 0)] = -limit
    out[singular & (ps <= 0)] = limit
    return complex(out[0]) if np.isscalar(p) else out


def sw_gaussian_coefficients(params: SquareWellParams, n_range):
    """Closed-form expansion coefficients of the initial Gaussian, from the
    Gaussian integral with the integration region extended to the whole
    real axis:

        a_n = (i/2) sqrt(2/L) (4 pi sigma^2)^(1/4)
              [e^{-i k_n x0} e^{-sigma^2 (k_n-p0)^2/2}
               - e^{+i k_n x0} e^{-sigma^2 (k_n+p0)^2/2}],  k_n = n pi / L.

    Returns (coefficients, near_wall_flag); the flag warns that the
    extension is inaccurate when the packet sits within 3 sigma of a wall.
    """
    ns = np.asarray(n_range)
    if np.any(ns < 1):
        raise IndexRangeError("square-well index starts at n=1")
    k = ns * np.pi / params.L
    s2 = params.sigma ** 2
    pref = 0.5j * np.sqrt(2.0 / params.L) * (4.0 * np.pi * s2) ** 0.25
    a = pref * (
        np.exp(-1j * k * params.x0) * np.exp(-s2 * (k - params.p0) ** 2 / 2.0)
        - np.exp(1j * k * params.x0) * np.exp(-s2 * (k + params.p0) ** 2 / 2.0)
    )
    return a, params.near_wall


def sw_timescales(params: SquareWellParams, n0):
    """(T_cl, T_rev) = (L^2/(pi n0), 2 L^2/pi) in the 2m = hbar = 1 scheme."""
    if n0 < 1:
        raise IndexRangeError("dominant index n0 must be >= 1")
    return params.L ** 2 / (np.pi * n0), 2.0 * params.L ** 2 / np.pi


def initial_gaussian(params: SquareWellParams, x):
    """psi(x, 0) on arbitrary sample points (normalized on the real axis)."""
    xs = np.asarray(x, dtype=np.float64)
    s2 = params.sigma ** 2
    return (np.pi * s2) ** -0.25 * np.exp(
        -((xs - params.x0) ** 2) / (2.0 * s2) + 1j * params.p0 * (xs - params.x0)
    )


class SquareWellBasis(Eigenbasis):
    system_kind = "square-well"
    min_index = 1

    def __init__(self, params: SquareWellParams):
        self.params = params

    def energies(self, ns):
        return sw_energy(ns, self.params.L)

    def eval_states(self, ns, x):
        xs = np.asarray(x, dtype=np.float64)
        if xs.min() < -1e-12 or xs.max() > self.params.L + 1e-12:
            raise DomainError(f"grid outside the box [0, {self.params.L}]")
        k = np.asarray(ns) * np.pi / self.params.L
        return np.sqrt(2.0 / self.params.L) * np.sin(np.outer(k, xs))

    def eval_phi(self, ns, p):
        return np.array([sw_eval_phi(int(n), p, self.params.L) for n in ns])

    @property
    def has_analytic_phi(self):
        return True

    def domain(self):
        return (0.0, self.params.L)

    def timescales(self, n0):
        return sw_timescales(self.params, n0)


def make_packet(params: SquareWellParams, n_min, n_max,
                renormalize=False, threshold=None):
    """Build, truncate and (optionally) renormalize the Gaussian packet."""
    basis = SquareWellBasis(params)
    ns = np.arange(n_min, n_max + 1)
    coeffs, _ = sw_gaussian_coefficients(params, ns)
    packet = SpectralPacket(basis, n_min, coeffs)
    packet = truncate(packet) if threshold is None else truncate(packet, threshold)
    if renormalize:
        packet = renormalized(packet)
    return packet
