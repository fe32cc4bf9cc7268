"""Exponent schedules: the (q1, q2, s, t, u1, u2, rho, n, a, alpha) tuples.

Each constraint tag encodes one binding relation between the parameters.
Schedules are built from a minimal generating subset; the constructor solves
the relation for the remaining parameter, stores the residual, and rejects
inputs off the constraint manifold, so sweeps cannot silently drift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

RESIDUAL_TOL = 1e-12


@dataclass(frozen=True)
class ExponentSchedule:
    constraint: str
    q1: float
    q2: float
    s: float = 0.0
    t: float = 0.0
    u1: float = 0.0
    u2: float = 0.0
    rho: float = 0.0
    n: float = 1.0
    a_dil: float = 0.0
    alpha: float = 0.0
    residual: float = field(default=0.0, compare=False)

    def params(self) -> dict:
        return {
            "constraint": self.constraint,
            "q1": self.q1,
            "q2": self.q2,
            "s": self.s,
            "t": self.t,
            "u1": self.u1,
            "u2": self.u2,
            "rho": self.rho,
            "n": self.n,
            "a_dil": self.a_dil,
            "alpha": self.alpha,
        }


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _rate_ratio(s: float, t: float, rho: float) -> float:
    """(e^{2 rho t} - 1) / (e^{2 rho s} - 1), with the t/s limit at rho = 0."""
    if rho == 0.0:
        return t / s
    return math.expm1(2.0 * rho * t) / math.expm1(2.0 * rho * s)


def cd_rho_infty(q1: float, s: float, t: float, rho: float, reverse: bool = False) -> ExponentSchedule:
    """Forward (q > 1) or reverse (q < 1 or q < 0) constant-curvature schedule.

    Binding relation: (q2 - 1)/(q1 - 1) = (e^{2 rho t} - 1)/(e^{2 rho s} - 1).
    """
    _require(0.0 < s <= t, f"need 0 < s <= t, got s={s}, t={t}")
    ratio = _rate_ratio(s, t, rho)
    q2 = 1.0 + (q1 - 1.0) * ratio
    tag = "CDRhoInftyReverse" if reverse else "CDRhoInfty"
    if reverse:
        _require(
            (0.0 < q2 <= q1 < 1.0) or (q2 <= q1 < 0.0),
            f"reverse schedule needs 0 < q2 <= q1 < 1 or q2 <= q1 < 0, got q1={q1}, q2={q2}",
        )
    else:
        _require(1.0 < q1 <= q2, f"forward schedule needs 1 < q1 <= q2, got q1={q1}, q2={q2}")
    residual = abs((q2 - 1.0) - (q1 - 1.0) * ratio)
    return ExponentSchedule(tag, q1, q2, s=s, t=t, rho=rho, residual=residual)


def cd_zero_n(
    q1: float,
    q2: float,
    u1: float,
    u2: float,
    n: float = 1.0,
    s: float = 0.0,
    reverse: bool = False,
) -> ExponentSchedule:
    """Dimensional schedule with binding relation t - s = u1 q1 - u2 q2."""
    _require(u1 >= 0.0 and u2 >= 0.0, f"need u1, u2 >= 0, got {u1}, {u2}")
    if reverse:
        _require(
            (0.0 < q2 < q1 < 1.0) or (q2 < q1 < 0.0),
            f"reverse needs 0 < q2 < q1 < 1 or q2 < q1 < 0, got q1={q1}, q2={q2}",
        )
    else:
        _require(1.0 < q1 < q2, f"forward needs 1 < q1 < q2, got q1={q1}, q2={q2}")
    inner = u1 * q1 - u2 * q2
    _require(inner >= 0.0, f"inner time u1 q1 - u2 q2 = {inner} must be nonnegative")
    tag = "CD0nReverse" if reverse else "CD0n"
    return ExponentSchedule(tag, q1, q2, s=s, t=s + inner, u1=u1, u2=u2, n=n)


def ou_dimensional(q1: float, t: float, a_dil: float = 0.0, n: float = 1.0) -> ExponentSchedule:
    """Dimensional Gaussian-kernel schedule: q2 - 1 = e^{2t} (q1 e^{-a} - 1)."""
    _require(t > 0.0, f"need t > 0, got {t}")
    q2 = 1.0 + math.exp(2.0 * t) * (q1 * math.exp(-a_dil) - 1.0)
    _require(1.0 < q1 < q2, f"need 1 < q1 < q2, got q1={q1}, q2={q2}")
    residual = abs((q2 - 1.0) - math.exp(2.0 * t) * (q1 * math.exp(-a_dil) - 1.0))
    _require(residual <= RESIDUAL_TOL, f"relation residual {residual} exceeds {RESIDUAL_TOL}")
    return ExponentSchedule("OUDimensional", q1, q2, t=t, a_dil=a_dil, n=n, residual=residual)


def hj_rho(q2: float, t: float, u: float, rho: float) -> ExponentSchedule:
    """Hamilton-Jacobi schedule: q1 = q2 + rho t / (1 - e^{-2 rho u}) (t/(2u) at rho=0)."""
    _require(q2 > 0.0, f"need q2 > 0, got {q2}")
    _require(u > 0.0 and t > 0.0, f"need u, t > 0, got u={u}, t={t}")
    if rho == 0.0:
        q1 = q2 + t / (2.0 * u)
    else:
        q1 = q2 + rho * t / (-math.expm1(-2.0 * rho * u))
    _require(q1 > q2, f"need q1 > q2, got q1={q1}, q2={q2}")
    return ExponentSchedule("HJRho", q1, q2, t=t, u1=u, u2=u, rho=rho)


def hj_zero_n(q1: float, q2: float, u1: float, u2: float, n: float = 1.0) -> ExponentSchedule:
    """Dimensional Hamilton-Jacobi schedule: t = 2 (u1 q1 - u2 q2)."""
    _require(q1 > q2 > 0.0, f"need q1 > q2 > 0, got q1={q1}, q2={q2}")
    _require(u1 > 0.0 and u2 > 0.0, f"need u1, u2 > 0, got {u1}, {u2}")
    t = 2.0 * (u1 * q1 - u2 * q2)
    _require(t > 0.0, f"need u1 q1 > u2 q2, got t = {t}")
    return ExponentSchedule("HJ0n", q1, q2, t=t, u1=u1, u2=u2, n=n)


def levy_fine(q1: float, s: float, t: float) -> ExponentSchedule:
    """Jump-semigroup fine schedule: q2 - 1 = (q2/q1)(t/s)(q1 - 1)."""
    _require(0.0 < s <= t, f"need 0 < s <= t, got s={s}, t={t}")
    _require(0.0 < q1 < 1.0, f"need 0 < q1 < 1, got {q1}")
    q2 = 1.0 / (1.0 - (t / s) * (q1 - 1.0) / q1)
    _require(0.0 < q2 <= q1, f"need 0 < q2 <= q1, got q1={q1}, q2={q2}")
    residual = abs((q2 - 1.0) - (q2 / q1) * (t / s) * (q1 - 1.0))
    _require(residual <= RESIDUAL_TOL, f"relation residual {residual} exceeds {RESIDUAL_TOL}")
    return ExponentSchedule("LevyFine", q1, q2, s=s, t=t, residual=residual)


def levy_coarse(q1: float, s: float, t: float) -> ExponentSchedule:
    """Jump-semigroup coarse schedule: q2 - 1 = (t/s)(q1 - 1).

    For fixed (s, t, q1) the coarse q2 sits farther from q1 than the fine
    one; the gap is asserted at construction.
    """
    _require(0.0 < s <= t, f"need 0 < s <= t, got s={s}, t={t}")
    _require(0.0 < q1 < 1.0, f"need 0 < q1 < 1, got {q1}")
    q2 = 1.0 + (t / s) * (q1 - 1.0)
    _require(0.0 < q2 <= q1, f"need 0 < q2 <= q1, got q1={q1}, q2={q2}")
    fine_q2 = levy_fine(q1, s, t).q2
    _require(
        q1 - q2 >= q1 - fine_q2 - RESIDUAL_TOL,
        f"coarse q2 = {q2} should be farther from q1 than fine q2 = {fine_q2}",
    )
    return ExponentSchedule("LevyCoarse", q1, q2, s=s, t=t)


def levy_ou(q1: float, t: float, alpha: float) -> ExponentSchedule:
    """Stable-driven OU schedule: q2 - 1 = (q2/q1)(q1 - 1) e^{alpha t}."""
    _require(0.0 < q1 < 1.0, f"need 0 < q1 < 1, got {q1}")
    _require(t >= 0.0, f"need t >= 0, got {t}")
    _require(0.0 < alpha <= 2.0, f"need alpha in (0, 2], got {alpha}")
    q2 = 1.0 / (1.0 - math.exp(alpha * t) * (q1 - 1.0) / q1)
    _require(0.0 < q2 <= q1, f"need 0 < q2 <= q1, got q1={q1}, q2={q2}")
    return ExponentSchedule("LevyOU", q1, q2, t=t, alpha=alpha)


# ---------------------------------------------------------------------------
# schedule constants


def dimensional_forward_constant(sch: ExponentSchedule) -> float:
    """M = ((q1-1)/u2)^{1-1/q1} ((q2-1)/u1)^{1/q2-1} ((u1 q1 - u2 q2)/(q2-q1))^{1/q2-1/q1}.

    Always >= 1 on valid schedules, with equality exactly when
    u1 (q1 - 1) = u2 (q2 - 1), i.e. (u1, u2) = (t, s) for the bound curve.
    """
    if sch.constraint != "CD0n":
        raise ValueError(f"M is defined for CD0n schedules, got {sch.constraint}")
    q1, q2, u1, u2 = sch.q1, sch.q2, sch.u1, sch.u2
    inner = u1 * q1 - u2 * q2
    value = (
        ((q1 - 1.0) / u2) ** (1.0 - 1.0 / q1)
        * ((q2 - 1.0) / u1) ** (1.0 / q2 - 1.0)
        * (inner / (q2 - q1)) ** (1.0 / q2 - 1.0 / q1)
    )
    if not math.isfinite(value):
        raise ValueError(f"degenerate exponents make M non-finite: q1={q1}, q2={q2}, u1={u1}, u2={u2}")
    return value


def dimensional_reverse_constant(sch: ExponentSchedule) -> float:
    """N, the reverse-orientation analogue of M."""
    if sch.constraint != "CD0nReverse":
        raise ValueError(f"N is defined for CD0nReverse schedules, got {sch.constraint}")
    q1, q2, u1, u2 = sch.q1, sch.q2, sch.u1, sch.u2
    inner = u1 * q1 - u2 * q2
    value = (
        ((1.0 - q1) / u2) ** (1.0 / q1 - 1.0)
        * ((1.0 - q2) / u1) ** (1.0 - 1.0 / q2)
        * (inner / (q1 - q2)) ** (1.0 / q1 - 1.0 / q2)
    )
    if not math.isfinite(value):
        raise ValueError(f"degenerate exponents make N non-finite: q1={q1}, q2={q2}, u1={u1}, u2={u2}")
    return value


def ou_dimensional_constant(sch: ExponentSchedule) -> float:
    """M for the Gaussian-kernel dimensional bound (equals 1 at a_dil = 0)."""
    if sch.constraint != "OUDimensional":
        raise ValueError(f"expected an OUDimensional schedule, got {sch.constraint}")
    q1, q2, t, a = sch.q1, sch.q2, sch.t, sch.a_dil
    return (
        ((q1 - 1.0) / math.exp(-2.0 * t)) ** (1.0 - 1.0 / q1)
        * ((q2 - 1.0) / math.exp(-a)) ** (1.0 / q2 - 1.0)
        * ((1.0 - math.exp(-2.0 * t)) / (q2 - q1)) ** (1.0 / q2 - 1.0 / q1)
    )


def hj_dimensional_bracket(sch: ExponentSchedule) -> float:
    """[u1^{1/q2} / u2^{1/q1} ((q1-q2)/(u1 q1 - u2 q2))^{1/q2-1/q1}]^{n/2}."""
    if sch.constraint != "HJ0n":
        raise ValueError(f"expected an HJ0n schedule, got {sch.constraint}")
    q1, q2, u1, u2 = sch.q1, sch.q2, sch.u1, sch.u2
    core = (
        u1 ** (1.0 / q2)
        / u2 ** (1.0 / q1)
        * ((q1 - q2) / (u1 * q1 - u2 * q2)) ** (1.0 / q2 - 1.0 / q1)
    )
    if not math.isfinite(core):
        raise ValueError("non-finite dimensional bracket")
    return core ** (sch.n / 2.0)


def levy_coarse_factor(sch: ExponentSchedule, total_mass: float) -> float:
    """exp[C s (t-s) (1-q2)^2 / (q2 (s q2 + t - s))] for finite jump mass C."""
    if sch.constraint != "LevyCoarse":
        raise ValueError(f"expected a LevyCoarse schedule, got {sch.constraint}")
    s, t, q2 = sch.s, sch.t, sch.q2
    return math.exp(total_mass * s * (t - s) * (1.0 - q2) ** 2 / (q2 * (s * q2 + t - s)))


def with_dimension(sch: ExponentSchedule, n: float) -> ExponentSchedule:
    return replace(sch, n=n)
