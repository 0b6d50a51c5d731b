"""Basis-agnostic spectral state and exact time propagation.

A packet is a set of complex coefficients a_n over an eigenbasis index
range; evolution multiplies each coefficient by exp(-i*E_n*t), so every
time sample is exact (no stepping error).
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, InvalidPacketError, ParameterError
from .grids import ComplexField, SpatialGrid

NORM_TOLERANCE = 1e-4          # acceptance gate on sum |a_n|^2
TRUNCATION_THRESHOLD = 1e-12   # retain indices with |a_n|^2 above this


class Eigenbasis:
    """Interface each model system implements: energies, eigenfunctions,
    admissible domain and (optionally) analytic momentum eigenstates."""

    system_kind = "abstract"
    min_index = 0

    def max_index(self):
        return None

    def energies(self, ns):
        raise NotImplementedError

    def eval_states(self, ns, x):
        """Matrix u_n(x_j) of shape (len(ns), len(x))."""
        raise NotImplementedError

    def eval_phi(self, ns, p):
        """Analytic momentum eigenstates, when the system has them."""
        raise NotImplementedError(f"{self.system_kind} has no analytic phi_n")

    @property
    def has_analytic_phi(self):
        return False

    def domain(self):
        """(lo, hi) admissible coordinate range; None for unbounded."""
        return (None, None)

    def validate_range(self, n_min, n_max):
        if n_max < n_min:
            raise InvalidPacketError(f"empty index range [{n_min}, {n_max}]")
        if n_min < self.min_index:
            raise InvalidPacketError(
                f"n_min={n_min} below lowest admissible index {self.min_index}"
            )
        top = self.max_index()
        if top is not None and n_max > top:
            raise InvalidPacketError(
                f"n_max={n_max} above highest bound index {top}"
            )


@dataclass
class SpectralPacket:
    """State of the system for all time: basis plus coefficients a_n on
    the contiguous index range n_min..n_min+len(coefficients)-1."""

    basis: Eigenbasis
    n_min: int
    coefficients: np.ndarray

    def __post_init__(self):
        self.coefficients = np.asarray(self.coefficients, dtype=np.complex128)
        if self.coefficients.ndim != 1 or self.coefficients.size == 0:
            raise InvalidPacketError("coefficient array must be 1-d and nonempty")
        self.basis.validate_range(self.n_min, self.n_max)

    @property
    def n_max(self):
        return self.n_min + len(self.coefficients) - 1

    @property
    def ns(self):
        return np.arange(self.n_min, self.n_max + 1)

    @property
    def energies(self):
        return self.basis.energies(self.ns)

    def dominant_index(self):
        return int(self.ns[np.argmax(np.abs(self.coefficients))])


def packet_norm(packet):
    """Sum of |a_n|^2 (reported raw; renormalization is opt-in)."""
    return float(np.sum(np.abs(packet.coefficients) ** 2))


def truncate(packet, threshold=TRUNCATION_THRESHOLD):
    """Trim to the index range bounding every |a_n|^2 > threshold.

    Interior coefficients below threshold stay (as ~zero entries): packets
    can have exact nodes in a_n (a resting packet at a rational position),
    and a node must not cut off the states beyond it.
    """
    w = np.abs(packet.coefficients) ** 2
    keep = np.nonzero(w > threshold)[0]
    if len(keep) == 0:
        peak = int(np.argmax(w))
        keep = np.array([peak])
    lo, hi = int(keep.min()), int(keep.max())
    return SpectralPacket(packet.basis, packet.n_min + lo,
                          packet.coefficients[lo:hi + 1])


def renormalized(packet):
    norm = packet_norm(packet)
    if norm <= 0.0:
        raise InvalidPacketError("cannot renormalize a zero packet")
    return SpectralPacket(packet.basis, packet.n_min,
                          packet.coefficients / np.sqrt(norm))


def _check_grid_domain(basis, grid):
    lo, hi = basis.domain()
    if lo is not None and grid.x_min < lo - 1e-12:
        raise DomainError(f"grid x_min={grid.x_min} below domain floor {lo}")
    if hi is not None and grid.x_max > hi + 1e-12:
        raise DomainError(f"grid x_max={grid.x_max} above domain ceiling {hi}")


def basis_matrix(packet, grid: SpatialGrid):
    """u_n(x_j) for the packet's index range; build once per sweep."""
    _check_grid_domain(packet.basis, grid)
    return packet.basis.eval_states(packet.ns, grid.points)


def evolve_position_batch(packet, grid, times, states=None):
    """psi(x_j, t) for each t in `times`, shape (len(times), n_points)."""
    u = basis_matrix(packet, grid) if states is None else states
    phases = kernels.phase_table(packet.energies, np.atleast_1d(times))
    return (phases * packet.coefficients) @ u


def evolve_position(packet, grid, t):
    """psi(x, t) = sum_n a_n u_n(x) exp(-i E_n t) sampled on the grid."""
    values = evolve_position_batch(packet, grid, [float(t)])[0]
    return ComplexField(grid, values)


def autocorrelation_batch(packet, times):
    w = np.abs(packet.coefficients) ** 2
    phases = kernels.phase_table(packet.energies, np.atleast_1d(times))
    return phases @ w


def autocorrelation(packet, t):
    """A(t) = sum_n |a_n|^2 exp(-i E_n t), the overlap of the initial and
    time-evolved packet."""
    return complex(autocorrelation_batch(packet, [float(t)])[0])


def classical_component(packet, grid, t, t_cl):
    """Non-dispersive companion field: same coefficients, linearized
    phases exp(-i 2*pi*n*t/T_cl); exactly periodic with period T_cl."""
    if t_cl <= 0:
        raise ParameterError(f"T_cl={t_cl} must be positive")
    u = basis_matrix(packet, grid)
    omega = 2.0 * np.pi * packet.ns / t_cl
    phases = kernels.phase_table(omega, [float(t)])[0]
    return ComplexField(grid, (phases * packet.coefficients) @ u)
