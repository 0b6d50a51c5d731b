"""Uniform sampling grids and sampled fields/densities."""

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DataError, GridError


def _is_power_of_two(n):
    return n >= 2 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class SpatialGrid:
    """Uniform, endpoint-inclusive window [x_min, x_max] with 2^k samples."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if self.x_max <= self.x_min:
            raise GridError(f"x_max={self.x_max} must exceed x_min={self.x_min}")
        if not _is_power_of_two(self.n_points):
            raise GridError(f"n_points={self.n_points} is not a power of two")

    @property
    def dx(self):
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def points(self):
        return np.linspace(self.x_min, self.x_max, self.n_points)


@dataclass(frozen=True)
class MomentumGrid:
    """Uniform momentum window; the FFT-conjugate constructor produces
    p_k = 2*pi*(k - M/2) / (M*dx)."""

    p_min: float
    p_max: float
    n_points: int

    def __post_init__(self):
        if self.p_max <= self.p_min:
            raise GridError(f"p_max={self.p_max} must exceed p_min={self.p_min}")
        if not _is_power_of_two(self.n_points):
            raise GridError(f"n_points={self.n_points} is not a power of two")

    @classmethod
    def conjugate_to(cls, grid: SpatialGrid, zero_pad: int = 1):
        if zero_pad < 1:
            raise GridError(f"zero_pad={zero_pad} must be >= 1")
        m = zero_pad * grid.n_points
        dp = 2.0 * np.pi / (m * grid.dx)
        return cls(-np.pi / grid.dx, np.pi / grid.dx - dp, m)

    @property
    def dp(self):
        return (self.p_max - self.p_min) / (self.n_points - 1)

    @property
    def points(self):
        return np.linspace(self.p_min, self.p_max, self.n_points)


@dataclass
class ComplexField:
    """Complex amplitudes sampled on a grid (psi(x), phi(p), psi_cl(x))."""

    grid: object
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.values.shape != (self.grid.n_points,):
            raise GridError(
                f"field length {self.values.shape} does not match grid "
                f"({self.grid.n_points} points)"
            )


@dataclass
class DensityProfile:
    """Nonnegative probability density sampled on a grid."""

    grid: object
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != (self.grid.n_points,):
            raise GridError(
                f"density length {self.values.shape} does not match grid "
                f"({self.grid.n_points} points)"
            )
        low = self.values.min()
        if low < -1e-12:
            raise DataError(f"density has negative value {low:.3e}")
        if low < 0.0:
            self.values = np.clip(self.values, 0.0, None)

    @property
    def step(self):
        return self.grid.dx if isinstance(self.grid, SpatialGrid) else self.grid.dp

    def integral(self):
        return kernels.simpson_integral(self.values, self.step)
