"""Closed-form geometry of a catenary build section.

The section starts at horizontal displacement ``s = 0`` (its top, where it
meets the upper build) and ends at ``s = s_end`` where it is horizontal. With
``u = (s_end - s) / a`` the vertical displacement measured down from the top is

    V(s) = v_end - a * (cosh(u) - 1)

so ``V(0) = 0`` requires ``v_end = a * (cosh(s_end / a) - 1)``, which fixes
the catenary parameter ``a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import build_constant
from .errors import BracketError, DomainError, InfeasibleDesignError
from .numerics import DEFAULT_TOLERANCE, Tolerance, find_root_bracketed

__all__ = [
    "CatenaryParams",
    "CatenaryPoint",
    "sag_residual",
    "solve_catenary_parameter",
    "vertical_displacement",
    "slope",
    "evaluate_point",
    "catenary_arc_length",
    "s_at_arc_length",
]

_MAX_BRACKET_DOUBLINGS = 200


@dataclass(frozen=True)
class CatenaryParams:
    a: float
    s_end: float
    v_end: float

    def __post_init__(self) -> None:
        for name in ("a", "s_end", "v_end"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be positive and finite, got {value}")

    @property
    def residual(self) -> float:
        """Mismatch of the boundary condition V(0) = 0, in ft."""
        return sag_residual(self.a, self.s_end, self.v_end)


@dataclass(frozen=True)
class CatenaryPoint:
    s: float
    v: float
    slope: float
    curvature: float  # signed, negative: V is concave in s
    radius: float
    build_rate: float  # deg/100 ft
    inclination: float  # deg


def sag_residual(a: float, s_end: float, v_end: float) -> float:
    """``a * (cosh(s_end / a) - 1) - v_end``; strictly decreasing in ``a``."""
    try:
        return a * (math.cosh(s_end / a) - 1.0) - v_end
    except OverflowError:
        return math.inf


def solve_catenary_parameter(
    v_end: float, s_end: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> CatenaryParams:
    """Solve for the catenary parameter spanning ``(s_end, v_end)``.

    The small-sag estimate ``s_end**2 / (2 * v_end)`` is a lower bound for the
    root (``cosh(x) - 1 >= x**2 / 2``), so the bracket is grown upward from it
    by doubling until the residual changes sign.
    """
    if not (v_end > 0 and s_end > 0):
        raise DomainError(
            f"v_end and s_end must be positive, got v_end={v_end}, s_end={s_end}"
        )

    def g(a: float) -> float:
        return sag_residual(a, s_end, v_end)

    lo = s_end * s_end / (2.0 * v_end)
    if g(lo) == 0.0:
        return CatenaryParams(lo, s_end, v_end)
    hi = 2.0 * lo
    for _ in range(_MAX_BRACKET_DOUBLINGS):
        if g(hi) <= 0.0:
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise InfeasibleDesignError(
            f"could not bracket the catenary parameter for v_end={v_end}, s_end={s_end}"
        )
    try:
        a = find_root_bracketed(g, lo, hi, tol)
    except BracketError as exc:
        raise InfeasibleDesignError(str(exc)) from exc
    return CatenaryParams(a, s_end, v_end)


def _check_s(p: CatenaryParams, s: float) -> None:
    if not 0.0 <= s <= p.s_end:
        raise DomainError(f"s={s} outside [0, {p.s_end}]")


def vertical_displacement(p: CatenaryParams, s: float) -> float:
    _check_s(p, s)
    return p.v_end - p.a * (math.cosh((p.s_end - s) / p.a) - 1.0)


def slope(p: CatenaryParams, s: float) -> float:
    """dV/dS at ``s``."""
    _check_s(p, s)
    return math.sinh((p.s_end - s) / p.a)


def evaluate_point(
    p: CatenaryParams, s: float, exact_constant: bool = False
) -> CatenaryPoint:
    _check_s(p, s)
    u = (p.s_end - s) / p.a
    cosh_u = math.cosh(u)
    dv_ds = math.sinh(u)
    d2v_ds2 = -cosh_u / p.a
    curvature = d2v_ds2 / (1.0 + dv_ds * dv_ds) ** 1.5
    return CatenaryPoint(
        s=s,
        v=p.v_end - p.a * (cosh_u - 1.0),
        slope=dv_ds,
        curvature=curvature,
        radius=1.0 / abs(curvature),
        build_rate=build_constant(exact_constant) * abs(curvature),
        inclination=90.0 - math.degrees(math.atan(dv_ds)),
    )


def catenary_arc_length(p: CatenaryParams, s1: float, s2: float) -> float:
    """Length of curve between horizontal displacements ``s1 <= s2``."""
    if not 0.0 <= s1 <= s2 <= p.s_end:
        raise DomainError(f"need 0 <= s1 <= s2 <= {p.s_end}, got s1={s1}, s2={s2}")
    # sinh(x1) - sinh(x2) as a product, to avoid cancellation on short spans
    mean = (p.s_end - 0.5 * (s1 + s2)) / p.a
    half = 0.5 * (s2 - s1) / p.a
    return 2.0 * p.a * math.cosh(mean) * math.sinh(half)


def s_at_arc_length(p: CatenaryParams, length: float) -> float:
    """Inverse of ``catenary_arc_length(p, 0, s)``."""
    total = catenary_arc_length(p, 0.0, p.s_end)
    if not 0.0 <= length <= total:
        raise DomainError(f"arc length {length} outside [0, {total}]")
    s = p.s_end - p.a * math.asinh(math.sinh(p.s_end / p.a) - length / p.a)
    return min(max(s, 0.0), p.s_end)
