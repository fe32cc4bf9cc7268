"""Uniform 1-D grids, quadrature, finite differences and Fourier multipliers.

This is the numerical substrate shared by every other module: sampled
functions live on a :class:`Grid`, integrals against probability measures go
through :func:`integrate` (trapezoid on the grid) or through the
Gauss-Hermite engine (:func:`expectation_gaussian`), and translation
invariant operators are applied spectrally with :func:`fourier_multiplier`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.interpolate import CubicSpline

DEFAULT_HALF_WIDTH = 8.0
DEFAULT_POINTS = 2048

# Values are clamped here before a log; the clamp is reported, not silent.
POSITIVITY_FLOOR = 1e-300
# Relative boundary magnitude above which the transform path warns.
BOUNDARY_DECAY_THRESHOLD = 1e-10

DEFAULT_HERMITE_NODES = 256


class BoundaryLeakageWarning(UserWarning):
    """Input does not decay at the grid boundary; spectral output is periodized."""


class DomainOverflowWarning(UserWarning):
    """Evaluation outside the grid; values are clamped to the boundary value."""


class PositivityClampWarning(UserWarning):
    """Non-positive values clamped to the positivity floor before a log."""


@dataclass(frozen=True)
class Grid:
    """Uniform grid on [-half_width, half_width], or on (0, half_width] in radial mode.

    Parameters
    ----------
    half_width : float
        Domain half width L; the line grid covers [-L, L].
    points : int
        Number of nodes N (N >= 8).
    radial : bool
        If set, nodes cover (0, L] with spacing L/N; used for radial
        reductions in nominal dimension n > 1.
    """

    half_width: float
    points: int
    radial: bool = False

    def __post_init__(self) -> None:
        if self.half_width <= 0:
            raise ValueError(f"half_width must be positive, got {self.half_width}")
        if self.points < 8:
            raise ValueError(f"need at least 8 points, got {self.points}")

    @property
    def spacing(self) -> float:
        if self.radial:
            return self.half_width / self.points
        return 2.0 * self.half_width / (self.points - 1)

    @property
    def nodes(self) -> np.ndarray:
        if self.radial:
            return np.linspace(self.spacing, self.half_width, self.points)
        return np.linspace(-self.half_width, self.half_width, self.points)


@dataclass(frozen=True)
class GridFunction:
    """Real function sampled at the nodes of a :class:`Grid`.

    ``strictly_positive`` marks functions that may enter log/entropy paths;
    it is validated at construction.
    """

    grid: Grid
    values: np.ndarray
    strictly_positive: bool = False

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        if values.shape != (self.grid.points,):
            raise ValueError(
                f"values shape {values.shape} does not match grid ({self.grid.points},)"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("grid function values must be finite")
        if self.strictly_positive and values.min() <= 0.0:
            raise ValueError("strictly_positive set but min(values) <= 0")

    def with_values(self, values: np.ndarray, strictly_positive: bool | None = None) -> "GridFunction":
        flag = self.strictly_positive if strictly_positive is None else strictly_positive
        return GridFunction(self.grid, values, strictly_positive=flag)

    def as_callable(self) -> Callable[[np.ndarray], np.ndarray]:
        """Cubic-spline evaluator, clamped to the boundary values outside the grid.

        The clamp keeps compositions positivity-safe; queries far outside the
        domain carry negligible Gaussian weight in every consumer.
        """
        x = self.grid.nodes
        spline = CubicSpline(x, self.values)
        lo, hi = x[0], x[-1]
        vlo, vhi = self.values[0], self.values[-1]

        def evaluate(pts: np.ndarray) -> np.ndarray:
            pts = np.asarray(pts, dtype=float)
            out = spline(np.clip(pts, lo, hi))
            out = np.where(pts < lo, vlo, out)
            out = np.where(pts > hi, vhi, out)
            return out

        return evaluate


def make_grid(half_width: float, points: int, radial: bool = False) -> Grid:
    """Build a uniform grid; rejects non-positive widths and fewer than 8 points."""
    return Grid(float(half_width), int(points), radial=radial)


def sample(grid: Grid, fn: Callable[[np.ndarray], np.ndarray], strictly_positive: bool = False) -> GridFunction:
    """Sample a callable onto the grid nodes."""
    return GridFunction(grid, np.asarray(fn(grid.nodes), dtype=float), strictly_positive=strictly_positive)


def integrate(f: GridFunction, m) -> float:
    """Trapezoid quadrature of the integral of f against the measure m.

    ``m`` is any measure object exposing ``density_on(grid)``; the measure's
    density is evaluated at the grid nodes of ``f``.
    """
    density = m.density_on(f.grid)
    value = float(np.trapezoid(f.values * density, f.grid.nodes))
    if not np.isfinite(value):
        raise FloatingPointError("non-finite quadrature value")
    return value


def integrate_lebesgue(f: GridFunction) -> float:
    """Plain trapezoid integral of f over the grid (Lebesgue measure)."""
    return float(np.trapezoid(f.values, f.grid.nodes))


@lru_cache(maxsize=16)
def gauss_hermite(count: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Hermite nodes and weights for the standard Gaussian measure.

    Probabilist normalization: sum(w * g(x)) approximates E g(Y) with Y
    standard normal.
    """
    knots, weights = np.polynomial.hermite.hermgauss(count)
    return knots * np.sqrt(2.0), weights / np.sqrt(np.pi)


def expectation_gaussian(
    fn: Callable[[np.ndarray], np.ndarray],
    mean: float | np.ndarray,
    sigma: float,
    nodes: int = DEFAULT_HERMITE_NODES,
) -> float | np.ndarray:
    """E fn(mean + sigma Y) with Y standard normal, by Gauss-Hermite quadrature.

    ``mean`` may be an array, in which case the expectation is computed for
    every entry (the quadrature broadcasts over a trailing node axis).
    """
    x, w = gauss_hermite(nodes)
    mean = np.asarray(mean, dtype=float)
    if mean.ndim == 0:
        return float(np.dot(w, fn(float(mean) + sigma * x)))
    pts = mean[..., None] + sigma * x
    return fn(pts) @ w


def hermite_integrate(f: GridFunction | Callable, mean: float, sigma: float, nodes: int = DEFAULT_HERMITE_NODES) -> float:
    """Gauss-Hermite cross-check path for Gaussian integrals.

    Accepts a grid function (evaluated through its spline) or a callable.
    Used as the independent quadrature oracle against :func:`integrate`.
    """
    fn = f.as_callable() if isinstance(f, GridFunction) else f
    return float(expectation_gaussian(fn, mean, sigma, nodes=nodes))


def fd_gradient(f: GridFunction) -> GridFunction:
    """Second-order finite-difference first derivative (one-sided at the ends)."""
    if f.grid.points < 3:
        raise ValueError("gradient needs at least 3 grid points")
    deriv = np.gradient(f.values, f.grid.spacing, edge_order=2)
    return GridFunction(f.grid, deriv)


def fd_laplacian(f: GridFunction, n: int = 1) -> GridFunction:
    """Finite-difference Laplacian; radial grids use f'' + (n-1) f'/r.

    Line grids require n == 1 (higher nominal dimension only enters through
    the radial reduction).
    """
    if f.grid.points < 4:
        raise ValueError("laplacian needs at least 4 grid points")
    if n > 1 and not f.grid.radial:
        raise ValueError("n > 1 requires a radial grid; mixed usage is rejected")
    h = f.grid.spacing
    v = f.values
    second = np.empty_like(v)
    second[1:-1] = (v[2:] - 2.0 * v[1:-1] + v[:-2]) / h**2
    second[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / h**2
    second[-1] = (2.0 * v[-1] - 5.0 * v[-2] + 4.0 * v[-3] - v[-4]) / h**2
    if f.grid.radial and n > 1:
        first = np.gradient(v, h, edge_order=2)
        second = second + (n - 1) * first / f.grid.nodes
    return GridFunction(f.grid, second)


def angular_frequencies(grid: Grid) -> np.ndarray:
    """Angular frequencies xi for the discrete transform on the grid."""
    return 2.0 * np.pi * np.fft.rfftfreq(grid.points, d=grid.spacing)


def fourier_multiplier(
    f: GridFunction,
    symbol: Callable[[np.ndarray], np.ndarray],
    decay_threshold: float = BOUNDARY_DECAY_THRESHOLD,
) -> GridFunction:
    """Apply a real even Fourier multiplier to f on its grid.

    Returns the inverse transform of symbol(|xi|) times the transform of f.
    If |f| at the boundary exceeds ``decay_threshold`` relative to max|f|, a
    :class:`BoundaryLeakageWarning` is emitted (periodization error is no
    longer negligible) but the computation proceeds.
    """
    if f.grid.radial:
        raise ValueError("fourier multiplier is defined on line grids only")
    v = f.values
    scale = np.abs(v).max()
    if scale > 0 and max(abs(v[0]), abs(v[-1])) > decay_threshold * scale:
        warnings.warn(
            "boundary values exceed the decay threshold; transform output is periodized",
            BoundaryLeakageWarning,
            stacklevel=2,
        )
    xi = angular_frequencies(f.grid)
    out = np.fft.irfft(np.fft.rfft(v) * symbol(xi), n=f.grid.points)
    return GridFunction(f.grid, out)


def kernel_from_symbol(grid: Grid, symbol: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Kernel values k(x_j) = (2 pi)^{-1} int symbol(xi) e^{i xi x_j} d xi on the grid.

    Periodized by construction: h * sum(k) equals symbol(0) exactly.
    """
    n, h = grid.points, grid.spacing
    xi = 2.0 * np.pi * np.fft.fftfreq(n, d=h)
    phase = np.exp(-1j * xi * grid.half_width)
    return np.fft.ifft(symbol(np.abs(xi)) * phase).real / h


def safe_log(values: np.ndarray, floor: float = POSITIVITY_FLOOR) -> np.ndarray:
    """log with the configured positivity floor; clamping is warned, not silent."""
    values = np.asarray(values, dtype=float)
    if np.any(values < floor):
        warnings.warn(
            "non-positive values clamped before log",
            PositivityClampWarning,
            stacklevel=2,
        )
        values = np.maximum(values, floor)
    return np.log(values)


def refine(f: GridFunction, factor: int) -> GridFunction:
    """Resample f on a grid with ``factor`` times as many points (spline)."""
    fine = replace(f.grid, points=f.grid.points * factor)
    return GridFunction(fine, f.as_callable()(fine.nodes), strictly_positive=f.strictly_positive)
