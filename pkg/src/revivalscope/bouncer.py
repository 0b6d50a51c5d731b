"""Gravitational quantum bouncer in dimensionless units (lengths in the
gravitational length l_g, energies in m*g*l_g).

Eigenfunctions are shifted Airy functions u_n(z) = N_n Ai(z - z_n) with
E_n = z_n the negated Airy zeros and N_n = 1/|Ai'(-z_n)| (exact Airy
norm identity); Gaussian coefficients come from composite-Simpson
quadrature against the eigenfunctions.
"""

import threading
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from . import kernels
from .errors import (DomainError, IndexRangeError, InsufficientRangeError,
                     ParameterError)
from .packets import Eigenbasis, SpectralPacket, renormalized, truncate

COEFF_NORM_FLOOR = 0.9999       # required sum |a_n|^2 over the supplied range
COEFF_PANELS = 2 ** 13          # Simpson panels for coefficient quadrature

_zero_cache = []
_zero_lock = threading.Lock()


def airy_ai(x, with_flag=False):
    """Ai(x) by Maclaurin series (|x| <= 7) or asymptotic expansion
    (|x| > 7); values for x > 100 underflow and are returned as 0.

    With ``with_flag=True`` also returns the underflow indicator.
    """
    xs = np.asarray(x, dtype=np.float64)
    if np.any(np.abs(xs) > 1e3):
        raise DomainError("airy_ai supports |x| <= 1e3")
    vals = kernels.airy_ai_values(xs if xs.ndim else xs.reshape(1))
    flag = xs > kernels.AIRY_UNDERFLOW
    if np.isscalar(x) or xs.ndim == 0:
        vals, flag = float(vals[0]), bool(np.atleast_1d(flag)[0])
    if with_flag:
        return vals, flag
    return vals


def airy_ai_prime(x):
    """Ai'(x), same method and branch structure as airy_ai."""
    xs = np.asarray(x, dtype=np.float64)
    if np.any(np.abs(xs) > 1e3):
        raise DomainError("airy_ai_prime supports |x| <= 1e3")
    vals = kernels.airy_ai_prime_values(xs if xs.ndim else xs.reshape(1))
    return float(vals[0]) if (np.isscalar(x) or xs.ndim == 0) else vals


def _zero_seed(n):
    # leading asymptotic estimate z_n ~ [3 pi (4n-1)/8]^(2/3), first correction
    t = 3.0 * np.pi * (4 * n - 1) / 8.0
    return t ** (2.0 / 3.0) * (1.0 + 5.0 / (48.0 * t * t))


def airy_zero(n):
    """n-th positive zero z_n of Ai(-z), bracketed around the asymptotic
    seed and refined to ~1e-13."""
    if n < 1:
        raise IndexRangeError("Airy zero index starts at n=1")
    with _zero_lock:
        while len(_zero_cache) < n:
            m = len(_zero_cache) + 1
            seed = _zero_seed(m)
            # local spacing pi/sqrt(z) comfortably brackets the seed error
            half = 0.45 * np.pi / np.sqrt(seed)
            lo, hi = seed - half, seed + half
            f = lambda z: airy_ai(-z)
            while f(lo) * f(hi) > 0:
                lo -= half
                hi += half
            _zero_cache.append(brentq(f, lo, hi, xtol=1e-13, rtol=8.9e-16))
    return _zero_cache[n - 1]


def airy_zeros(n_max):
    airy_zero(n_max)
    return np.array(_zero_cache[:n_max])


def bouncer_eigenstate(n, z):
    """u_n(z) = N_n Ai(z - z_n) for z >= 0, with N_n = 1/|Ai'(-z_n)| so
    that the state is unit-normalized on [0, inf)."""
    zs = np.asarray(z, dtype=np.float64)
    if np.any(zs < -1e-12):
        raise DomainError("bouncer coordinate must satisfy z >= 0")
    zn = airy_zero(n)
    norm = 1.0 / abs(airy_ai_prime(-zn))
    vals = norm * kernels.airy_ai_values(np.atleast_1d(zs - zn))
    return float(vals[0]) if (np.isscalar(z) or zs.ndim == 0) else vals


@dataclass(frozen=True)
class BouncerParams:
    """Gaussian drop from dimensionless height z0 with width sigma."""

    z0: float
    sigma: float = 1.0
    p0: float = 0.0

    def __post_init__(self):
        if self.z0 <= 0:
            raise ParameterError(f"z0={self.z0} must be positive")
        if self.sigma <= 0:
            raise ParameterError(f"sigma={self.sigma} must be positive")
        if self.z0 - 4.0 * self.sigma <= 0:
            raise ParameterError(
                f"packet must clear the floor: z0 - 4 sigma = "
                f"{self.z0 - 4 * self.sigma} <= 0"
            )


def bouncer_timescales(params: BouncerParams):
    """(T_cl, T_rev) = (2 sqrt(z0), 4 z0^2 / pi)."""
    return 2.0 * np.sqrt(params.z0), 4.0 * params.z0 ** 2 / np.pi


def initial_gaussian(params: BouncerParams, z):
    zs = np.asarray(z, dtype=np.float64)
    s2 = params.sigma ** 2
    psi = (np.pi * s2) ** -0.25 * np.exp(
        -((zs - params.z0) ** 2) / (2.0 * s2) + 1j * params.p0 * (zs - params.z0)
    )
    return psi


def bouncer_gaussian_coefficients(params: BouncerParams, n_range):
    """a_n = Integral_0^inf u_n(z) psi0(z) dz by composite Simpson on
    [0, z0 + 10 sigma] (the Gaussian is ~1e-22 of peak at the cut).

    Raises InsufficientRangeError when the supplied range captures less
    than 0.9999 of the norm.
    """
    ns = np.asarray(n_range)
    if np.any(ns < 1):
        raise IndexRangeError("bouncer index starts at n=1")
    hi = params.z0 + 10.0 * params.sigma
    zq = np.linspace(0.0, hi, COEFF_PANELS + 1)
    dz = zq[1] - zq[0]
    psi0 = initial_gaussian(params, zq)
    real0 = np.abs(psi0.imag).max() < 1e-300
    coeffs = np.empty(len(ns), dtype=np.complex128)
    zeros = airy_zeros(int(ns.max()))
    for i, n in enumerate(ns):
        zn = zeros[n - 1]
        un = kernels.airy_ai_values(zq - zn) / abs(airy_ai_prime(-zn))
        if real0:
            coeffs[i] = kernels.simpson_integral(un * psi0.real, dz)
        else:
            coeffs[i] = (kernels.simpson_integral(un * psi0.real, dz)
                         + 1j * kernels.simpson_integral(un * psi0.imag, dz))
    captured = float(np.sum(np.abs(coeffs) ** 2))
    if captured < COEFF_NORM_FLOOR:
        raise InsufficientRangeError(captured, COEFF_NORM_FLOOR)
    return coeffs


class BouncerBasis(Eigenbasis):
    system_kind = "bouncer"
    min_index = 1

    def __init__(self, params: BouncerParams):
        self.params = params

    def energies(self, ns):
        return airy_zeros(int(np.max(ns)))[np.asarray(ns) - 1]

    def eval_states(self, ns, z):
        zs = np.asarray(z, dtype=np.float64)
        if zs.min() < -1e-12:
            raise DomainError("grid extends below the floor z=0")
        ns = np.asarray(ns)
        zeros = airy_zeros(int(ns.max()))[ns - 1]
        norms = 1.0 / np.abs(kernels.airy_ai_prime_values(-zeros))
        args = zs[None, :] - zeros[:, None]
        vals = kernels.airy_ai_values(args.ravel()).reshape(args.shape)
        return norms[:, None] * vals

    def domain(self):
        return (0.0, None)

    def timescales(self, n0=None):
        return bouncer_timescales(self.params)


def make_packet(params: BouncerParams, n_min, n_max, renormalize=False):
    basis = BouncerBasis(params)
    coeffs = bouncer_gaussian_coefficients(params, np.arange(n_min, n_max + 1))
    packet = truncate(SpectralPacket(basis, n_min, coeffs))
    if renormalize:
        packet = renormalized(packet)
    return packet
