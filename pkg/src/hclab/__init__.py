"""Numerical verification lab for semigroup hypercontractivity bounds.

The package checks, at desk scale, a family of inequalities for heat,
Ornstein-Uhlenbeck and alpha-stable semigroups: pointwise hypercontractive
bounds under curvature conditions, local log-Sobolev bounds, Hamilton-Jacobi
hypercontractivity, transport (Talagrand-type) inequalities and their
dimensional refinements.  Every check reports the two sides of the
inequality, the signed margin and whether the bound is saturated.
"""

__version__ = "0.1.0"

from .grid import Grid, GridFunction, make_grid, integrate
from .measures import Gaussian, OUKernel, StableLaw, GridDensity
from .reports import InequalityReport

__all__ = [
    "Grid",
    "GridFunction",
    "make_grid",
    "integrate",
    "Gaussian",
    "OUKernel",
    "StableLaw",
    "GridDensity",
    "InequalityReport",
    "__version__",
]
