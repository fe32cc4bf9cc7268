"""Probability measures: Gaussians, semigroup kernel laws, stable laws, grid densities.

Every variant exposes ``density_on(grid)`` so :func:`hclab.grid.integrate`
can consume it, and the 1-D variants expose a CDF for the transport module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gamma as gamma_fn
from typing import Union

import numpy as np
from scipy.integrate import cumulative_simpson
from scipy.special import ndtr, ndtri

from .grid import Grid, GridFunction

NORMALIZATION_TOL = 1e-8


def _radial_gaussian_density(r: np.ndarray, sigma2: float, n: int) -> np.ndarray:
    # density of |X| for X ~ N(0, sigma2 I_n): r^{n-1} e^{-r^2/2s2} / (2^{n/2-1} G(n/2) s2^{n/2})
    norm = 2.0 ** (n / 2.0 - 1.0) * gamma_fn(n / 2.0) * sigma2 ** (n / 2.0)
    return r ** (n - 1) * np.exp(-(r**2) / (2.0 * sigma2)) / norm


@dataclass(frozen=True)
class Gaussian:
    """Gaussian measure N(mean, variance) per coordinate, nominal dimension n."""

    mean: float = 0.0
    variance: float = 1.0
    dimension: int = 1

    def __post_init__(self) -> None:
        if self.variance <= 0:
            raise ValueError(f"variance must be positive, got {self.variance}")
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")

    @property
    def sigma(self) -> float:
        return float(np.sqrt(self.variance))

    def density_on(self, grid: Grid) -> np.ndarray:
        if grid.radial:
            if self.mean != 0.0:
                raise ValueError("radial mode requires a centered Gaussian")
            return _radial_gaussian_density(grid.nodes, self.variance, self.dimension)
        if self.dimension != 1:
            raise ValueError("line grids carry 1-D measures; use a radial grid for n > 1")
        z = (grid.nodes - self.mean) / self.sigma
        return np.exp(-0.5 * z**2) / (self.sigma * np.sqrt(2.0 * np.pi))

    def cdf(self, x: np.ndarray) -> np.ndarray:
        return ndtr((np.asarray(x, dtype=float) - self.mean) / self.sigma)

    def quantile(self, u: np.ndarray) -> np.ndarray:
        return self.mean + self.sigma * ndtri(np.asarray(u, dtype=float))


def standard_gaussian(n: int = 1) -> Gaussian:
    return Gaussian(0.0, 1.0, n)


@dataclass(frozen=True)
class OUKernel:
    """Law of the Ornstein-Uhlenbeck kernel N_t(x, .): Gaussian around e^{-t} x."""

    center: float
    time: float
    dimension: int = 1

    def __post_init__(self) -> None:
        if self.time <= 0:
            raise ValueError(f"OU kernel needs t > 0, got {self.time}")

    def as_gaussian(self) -> Gaussian:
        decay = np.exp(-self.time)
        return Gaussian(self.center * decay, 1.0 - decay**2, self.dimension)

    def density_on(self, grid: Grid) -> np.ndarray:
        return self.as_gaussian().density_on(grid)

    def cdf(self, x: np.ndarray) -> np.ndarray:
        return self.as_gaussian().cdf(x)

    def quantile(self, u: np.ndarray) -> np.ndarray:
        return self.as_gaussian().quantile(u)


def heat_kernel_measure(center: float, time: float, dimension: int = 1) -> Gaussian:
    """Law of the heat kernel P_t(x, .): Gaussian with variance 2t around x."""
    if time <= 0:
        raise ValueError(f"heat kernel needs t > 0, got {time}")
    return Gaussian(center, 2.0 * time, dimension)


@dataclass(frozen=True)
class StableLaw:
    """Symmetric alpha-stable law at time t (Fourier symbol e^{-t |xi|^alpha})."""

    index: float
    time: float
    dimension: int = 1

    def __post_init__(self) -> None:
        if not 0.0 < self.index <= 2.0:
            raise ValueError(f"stable index must lie in (0, 2], got {self.index}")
        if self.time <= 0:
            raise ValueError(f"stable law needs t > 0, got {self.time}")

    def density_on(self, grid: Grid) -> np.ndarray:
        if grid.radial or self.dimension != 1:
            raise ValueError("stable laws are realized on 1-D line grids")
        from .levy import stable_kernel  # lazy: levy builds kernels on grids

        return stable_kernel(self.index, self.time, grid).values


@dataclass(frozen=True)
class GridDensity:
    """Probability density sampled on a grid; must be normalized within 1e-8."""

    values: GridFunction

    def __post_init__(self) -> None:
        v = self.values.values
        if v.min() < 0.0:
            raise ValueError("grid density must be nonnegative")
        mass = float(np.trapezoid(v, self.values.grid.nodes))
        if abs(mass - 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"grid density mass {mass} deviates from 1 beyond {NORMALIZATION_TOL}")

    def density_on(self, grid: Grid) -> np.ndarray:
        if grid != self.values.grid:
            raise ValueError("grid mismatch between density and integrand")
        return self.values.values

    def cdf_nodes(self) -> np.ndarray:
        """CDF at the grid nodes (cumulative Simpson, clipped monotone to [0, 1])."""
        grid = self.values.grid
        cdf = cumulative_simpson(self.values.values, x=grid.nodes, initial=0.0)
        cdf = np.maximum.accumulate(np.clip(cdf, 0.0, None))
        total = cdf[-1]
        return np.clip(cdf / total, 0.0, 1.0)


MeasureSpec = Union[Gaussian, OUKernel, StableLaw, GridDensity]


def normalized_grid_density(f: GridFunction, tol: float = NORMALIZATION_TOL) -> GridDensity:
    """Wrap f as a probability density, renormalizing only within ``tol``.

    Larger mass defects are rejected so theorem preconditions are honored
    rather than silently repaired.
    """
    mass = float(np.trapezoid(f.values, f.grid.nodes))
    if abs(mass - 1.0) > tol:
        raise ValueError(f"density mass {mass} violates normalization beyond {tol}")
    return GridDensity(f.with_values(f.values / mass))
