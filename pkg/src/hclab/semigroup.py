"""Heat, Ornstein-Uhlenbeck and dilation semigroups, on grids and closed forms.

Each semigroup has two independent evaluation paths: exact parameter
propagation for the closed-form families (square exponentials, polynomials,
exponentials of linear functions) and a grid/spectral path.  Checker modules
exploit cross-path agreement as a built-in oracle.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Callable, Union

import numpy as np

from .grid import (
    DomainOverflowWarning,
    Grid,
    GridFunction,
    expectation_gaussian,
    fourier_multiplier,
)


# ---------------------------------------------------------------------------
# closed forms


@dataclass(frozen=True)
class SquareExponential:
    """c * exp(a |x|^2) in nominal dimension n.

    Heat flow is exact on this family while 1 - 4 t a > 0.
    """

    coefficient: float
    prefactor: float = 1.0
    dimension: int = 1

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.prefactor * np.exp(self.coefficient * np.asarray(x, dtype=float) ** 2)

    def heat(self, t: float) -> "SquareExponential":
        if t == 0.0:
            return self
        a = self.coefficient
        denom = 1.0 - 4.0 * t * a
        if denom <= 0.0:
            raise ValueError(
                f"heat flow of exp({a} x^2) blows up at t = {1.0 / (4.0 * a):.6g}; requested t = {t}"
            )
        return SquareExponential(
            a / denom,
            self.prefactor * denom ** (-self.dimension / 2.0),
            self.dimension,
        )

    def ou(self, t: float) -> "SquareExponential":
        if t == 0.0:
            return self
        a = self.coefficient
        s2 = 1.0 - math.exp(-2.0 * t)
        denom = 1.0 - 2.0 * a * s2
        if denom <= 0.0:
            raise ValueError(f"OU flow of exp({a} x^2) is undefined at t = {t}")
        return SquareExponential(
            a * math.exp(-2.0 * t) / denom,
            self.prefactor * denom ** (-self.dimension / 2.0),
            self.dimension,
        )

    def dilate(self, a: float) -> "SquareExponential":
        return replace(self, coefficient=self.coefficient * math.exp(a))

    def power(self, q: float) -> "SquareExponential":
        return SquareExponential(q * self.coefficient, self.prefactor**q, self.dimension)

    def gaussian_mean(self) -> float:
        """Integral against the standard Gaussian in dimension n (exact)."""
        arg = 1.0 - 2.0 * self.coefficient
        if arg <= 0.0:
            return math.inf
        return self.prefactor * arg ** (-self.dimension / 2.0)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with 1-D coefficients, lowest degree first."""

    coefficients: tuple[float, ...]

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return np.polynomial.polynomial.polyval(np.asarray(x, dtype=float), self.coefficients)

    def heat(self, t: float) -> "Polynomial":
        # E p(x + sqrt(2t) Y) expanded with Gaussian moments E Y^j = (j-1)!!
        return self._gaussian_shift(1.0, math.sqrt(2.0 * t) if t > 0 else 0.0)

    def ou(self, t: float) -> "Polynomial":
        decay = math.exp(-t)
        return self._gaussian_shift(decay, math.sqrt(max(1.0 - decay**2, 0.0)))

    def dilate(self, a: float) -> "Polynomial":
        scale = math.exp(a / 2.0)
        return Polynomial(tuple(c * scale**k for k, c in enumerate(self.coefficients)))

    def _gaussian_shift(self, scale: float, sigma: float) -> "Polynomial":
        # coefficients of x -> E p(scale x + sigma Y)
        deg = len(self.coefficients) - 1
        out = np.zeros(deg + 1)
        for k, c in enumerate(self.coefficients):
            if c == 0.0:
                continue
            for j in range(0, k + 1, 2):
                moment = _double_factorial(j - 1) * sigma**j
                out[k - j] += c * math.comb(k, j) * scale ** (k - j) * moment
        return Polynomial(tuple(out))


def _double_factorial(m: int) -> float:
    if m <= 0:
        return 1.0
    return float(math.prod(range(m, 0, -2)))


@dataclass(frozen=True)
class Linear:
    """b * x; invariant under the heat flow by odd symmetry of the kernel."""

    slope: float

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.slope * np.asarray(x, dtype=float)

    def heat(self, t: float) -> "Linear":
        return self

    def ou(self, t: float) -> "Linear":
        return Linear(self.slope * math.exp(-t))

    def dilate(self, a: float) -> "Linear":
        return Linear(self.slope * math.exp(a / 2.0))


@dataclass(frozen=True)
class ExpLinear:
    """c0 * exp(c x): closed under heat, OU and dilation flows."""

    coefficient: float
    prefactor: float = 1.0

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.prefactor * np.exp(self.coefficient * np.asarray(x, dtype=float))

    def heat(self, t: float) -> "ExpLinear":
        return replace(self, prefactor=self.prefactor * math.exp(self.coefficient**2 * t))

    def ou(self, t: float) -> "ExpLinear":
        decay = math.exp(-t)
        s2 = 1.0 - decay**2
        return ExpLinear(
            self.coefficient * decay,
            self.prefactor * math.exp(self.coefficient**2 * s2 / 2.0),
        )

    def dilate(self, a: float) -> "ExpLinear":
        return replace(self, coefficient=self.coefficient * math.exp(a / 2.0))


ClosedForm = Union[SquareExponential, Polynomial, Linear, ExpLinear]
FunctionLike = Union[GridFunction, SquareExponential, Polynomial, Linear, ExpLinear]


def as_callable(f: FunctionLike) -> Callable[[np.ndarray], np.ndarray]:
    if isinstance(f, GridFunction):
        return f.as_callable()
    return f


# ---------------------------------------------------------------------------
# semigroup application


def _check_time(t: float) -> None:
    if t < 0:
        raise ValueError(f"semigroup time must be nonnegative, got {t}")


def heat_apply(f: FunctionLike, t: float, n: int = 1) -> FunctionLike:
    """Heat semigroup P_t f.

    Closed forms propagate exactly; grid functions go through the spectral
    multiplier e^{-t xi^2} (which requires boundary decay).
    """
    _check_time(t)
    if isinstance(f, GridFunction):
        if n != 1:
            raise ValueError("grid heat flow is 1-D; use closed forms or radial reductions for n > 1")
        if t == 0.0:
            return f
        out = fourier_multiplier(f, lambda xi: np.exp(-t * xi**2))
        return out.with_values(out.values, strictly_positive=False)
    if isinstance(f, SquareExponential) and f.dimension != n:
        f = replace(f, dimension=n)
    return f.heat(t)


def heat_at(f: FunctionLike, t: float, x: float, nodes: int = 256) -> float:
    """P_t f(x) by Gauss-Hermite quadrature (pointwise path, no grid transform)."""
    _check_time(t)
    fn = as_callable(f)
    if t == 0.0:
        return float(fn(np.asarray(x)))
    return float(expectation_gaussian(fn, x, math.sqrt(2.0 * t), nodes=nodes))


def ou_apply(f: FunctionLike, t: float, n: int = 1) -> FunctionLike:
    """Ornstein-Uhlenbeck semigroup N_t f via the Gaussian-average representation.

    N_t f(x) = E f(e^{-t} x + sqrt(1 - e^{-2t}) Y); grid functions are
    evaluated at every node by quadrature in Y.
    """
    _check_time(t)
    if isinstance(f, GridFunction):
        if n != 1:
            raise ValueError("grid OU flow is 1-D")
        if t == 0.0:
            return f
        decay = math.exp(-t)
        sigma = math.sqrt(1.0 - decay**2)
        vals = expectation_gaussian(f.as_callable(), decay * f.grid.nodes, sigma)
        return GridFunction(f.grid, vals, strictly_positive=f.strictly_positive)
    return f.ou(t)


def ou_at(f: FunctionLike, t: float, x: float, nodes: int = 256) -> float:
    """N_t f(x), pointwise quadrature path."""
    _check_time(t)
    fn = as_callable(f)
    if t == 0.0:
        return float(fn(np.asarray(x)))
    decay = math.exp(-t)
    return float(expectation_gaussian(fn, decay * x, math.sqrt(1.0 - decay**2), nodes=nodes))


def dilation_apply(f: FunctionLike, a: float, overflow_tol: float = 1e-9) -> FunctionLike:
    """Dilation semigroup T_a f(x) = f(e^{a/2} x).

    On grids, a > 0 pushes evaluation outside the domain; the clamped values
    are used and a :class:`DomainOverflowWarning` is emitted when the
    boundary value is non-negligible.
    """
    if isinstance(f, GridFunction):
        if a == 0.0:
            return f
        scale = math.exp(a / 2.0)
        pts = scale * f.grid.nodes
        if scale > 1.0:
            edge = max(abs(f.values[0]), abs(f.values[-1]))
            top = np.abs(f.values).max()
            if top > 0 and edge > overflow_tol * top:
                warnings.warn(
                    "dilation evaluates outside the grid; boundary-clamped values used",
                    DomainOverflowWarning,
                    stacklevel=2,
                )
        return GridFunction(f.grid, f.as_callable()(pts), strictly_positive=f.strictly_positive)
    return f.dilate(a)


def ou_from_heat(f: FunctionLike, t: float, n: int = 1) -> FunctionLike:
    """N_t f realized as T_a P_b f with a = -2t and b = (1 - e^{-2t})/2.

    Must agree with :func:`ou_apply`; the two paths are kept independent so
    the composition identity can serve as an oracle.
    """
    _check_time(t)
    if t == 0.0:
        return f
    b = (1.0 - math.exp(-2.0 * t)) / 2.0
    return dilation_apply(heat_apply(f, b, n=n), -2.0 * t)


def ou_from_heat_at(f: FunctionLike, t: float, x: float, nodes: int = 256) -> float:
    """Pointwise T_{-2t} P_b f(x) = P_b f(e^{-t} x); quadrature path."""
    _check_time(t)
    if t == 0.0:
        return float(as_callable(f)(np.asarray(x)))
    b = (1.0 - math.exp(-2.0 * t)) / 2.0
    return heat_at(f, b, math.exp(-t) * x, nodes=nodes)


def ou_kernel_diagonal(t: float, x: float, n: int = 1) -> float:
    """Density of N_t(x, .) against the standard Gaussian, evaluated at y = x.

    From the explicit Gaussian form of the kernel:
    (1 - e^{-2t})^{-n/2} exp(|x|^2 e^{-t} / (1 + e^{-t})).
    """
    if t <= 0:
        raise ValueError(f"kernel diagonal needs t > 0, got {t}")
    decay = math.exp(-t)
    return (1.0 - decay**2) ** (-n / 2.0) * math.exp(x**2 * decay / (1.0 + decay))
