"""Scalar root finding and fixed-step integration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import BracketError, ConvergenceError, DomainError, NumericError

__all__ = ["Tolerance", "find_root_bracketed", "integrate_ode_1d"]


@dataclass(frozen=True)
class Tolerance:
    """Stopping rule for iterative solvers.

    ``abs_tol`` is in the units of the unknown (ft for the catenary solve).
    """

    abs_tol: float = 1e-6
    max_iterations: int = 200

    def __post_init__(self) -> None:
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_iterations < 1:
            raise DomainError(
                f"max_iterations must be >= 1, got {self.max_iterations}"
            )


DEFAULT_TOLERANCE = Tolerance()


def _sign(y: float) -> int:
    if math.isnan(y):
        raise NumericError("function evaluated to NaN")
    return (y > 0) - (y < 0)


def find_root_bracketed(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> float:
    """Find a root of ``f`` inside ``[lo, hi]`` by bisection.

    The bracket is halved until its width drops below ``tol.abs_tol``, the
    midpoint hits an exact zero, or floating-point resolution is exhausted.
    Of all evaluated points, the one with the smallest ``|f|`` is returned,
    so the result is never worse than either bracket end.

    Raises:
        BracketError: ``f(lo)`` and ``f(hi)`` have the same sign.
        ConvergenceError: ``tol.max_iterations`` halvings were not enough.
    """
    if lo > hi:
        lo, hi = hi, lo
    f_lo, f_hi = f(lo), f(hi)
    s_lo, s_hi = _sign(f_lo), _sign(f_hi)
    if s_lo == 0:
        return lo
    if s_hi == 0:
        return hi
    if s_lo == s_hi:
        raise BracketError(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )

    best_x, best_y = (lo, abs(f_lo)) if abs(f_lo) <= abs(f_hi) else (hi, abs(f_hi))
    for _ in range(tol.max_iterations):
        if hi - lo <= tol.abs_tol:
            return best_x
        mid = lo + 0.5 * (hi - lo)
        if mid <= lo or mid >= hi:
            # bracket is two adjacent floats
            return best_x
        f_mid = f(mid)
        s_mid = _sign(f_mid)
        if abs(f_mid) < best_y:
            best_x, best_y = mid, abs(f_mid)
        if s_mid == 0:
            return mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    if hi - lo <= tol.abs_tol:
        return best_x
    raise ConvergenceError(
        f"bracket [{lo!r}, {hi!r}] still wider than {tol.abs_tol} after "
        f"{tol.max_iterations} iterations"
    )


def integrate_ode_1d(
    rhs: Callable[[float], float],
    theta0: float,
    theta1: float,
    f0: float,
    steps: int = 10_000,
) -> float:
    """Integrate ``df/dtheta = rhs(theta)`` from ``theta0`` to ``theta1``.

    Classic fixed-step RK4. With a right-hand side independent of ``f`` it
    collapses to composite Simpson, so the global error is O(steps**-4).
    """
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    if theta1 < theta0:
        raise DomainError(f"theta1 ({theta1}) must be >= theta0 ({theta0})")

    def k(theta: float) -> float:
        y = rhs(theta)
        if not math.isfinite(y):
            raise NumericError(f"rhs({theta!r}) is not finite: {y!r}")
        return y

    h = (theta1 - theta0) / steps
    f = f0
    k_prev = k(theta0)
    for i in range(steps):
        t = theta0 + i * h
        k1 = k_prev
        k23 = k(t + 0.5 * h)
        k4 = k(theta0 + (i + 1) * h)
        f += h / 6.0 * (k1 + 4.0 * k23 + k4)
        k_prev = k4
    return f
