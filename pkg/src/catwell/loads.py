"""Soft-string hook-load models for arc and catenary designs.

The string is treated as a weighted rope lying on the low side of the hole
with Coulomb friction. Pulling out of hole (hoisting), friction adds to the
axial force; running in (lowering), it subtracts.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace
from typing import Optional

from .errors import DomainError

__all__ = [
    "HookLoadCase",
    "HookLoadBreakdown",
    "CurveElementForces",
    "heel_drag",
    "curve_drag_closed_form",
    "curve_drag_rhs",
    "curve_element_forces",
    "arc_hookload",
    "catenary_hookload",
    "hookload",
    "percent_difference",
]

HOISTING = "hoisting"
LOWERING = "lowering"


@dataclass(frozen=True)
class HookLoadCase:
    mu_h: float
    mu_c: float
    w_h: float  # lbf/ft
    w_c: float  # lbf/ft
    w_v: float  # lbf/ft
    horizontal_length: float  # ft
    vertical_length: float  # ft
    radius: float  # ft
    inclination: float = 90.0  # deg, catenary top
    design_kind: str = "arc"

    def __post_init__(self) -> None:
        if min(self.w_h, self.w_c, self.w_v) <= 0:
            raise DomainError("pipe weights must be positive")
        if min(self.mu_h, self.mu_c) < 0:
            raise DomainError("friction coefficients must be non-negative")
        if min(self.horizontal_length, self.vertical_length) < 0:
            raise DomainError("lengths must be non-negative")
        if not self.radius > 0:
            raise DomainError("radius must be positive")
        if self.design_kind not in ("arc", "catenary"):
            raise DomainError(f"unknown design kind {self.design_kind!r}")
        if self.design_kind == "catenary" and not 0.0 < self.inclination <= 90.0:
            raise DomainError(f"catenary top inclination {self.inclination} not in (0, 90]")

    def with_(self, **changes) -> "HookLoadCase":
        return replace(self, **changes)


@dataclass(frozen=True)
class HookLoadBreakdown:
    f_heel: float
    f_ct: Optional[float]
    f_o: float
    w_v_total: float
    tension: float

    def as_report(self) -> dict:
        return {
            "f_heel_lbf": self.f_heel,
            "f_ct_lbf": self.f_ct,
            "f_o_lbf": self.f_o,
            "w_v_lbf": self.w_v_total,
            "tension_lbf": self.tension,
        }


@dataclass(frozen=True)
class CurveElementForces:
    theta: float
    segment_weight: float
    normal_force: float
    friction_force: float


def heel_drag(mu: float, w: float, length: float) -> float:
    """Axial force at the heel from dragging ``length`` ft of lateral pipe."""
    return mu * w * length


def curve_drag_closed_form(
    w_c: float,
    r: float,
    mu: float,
    theta1: float,
    theta2: float,
    direction: str = HOISTING,
) -> float:
    """Axial force gained through a circular bend from ``theta1`` to ``theta2`` (rad).

    Angles are measured from the horizontal at the heel end, so ``0 -> pi/2``
    covers a full build from vertical to horizontal.
    """
    if not 0.0 <= theta1 <= theta2 <= math.pi / 2 + 1e-12:
        raise DomainError(f"need 0 <= theta1 <= theta2 <= pi/2, got {theta1}, {theta2}")
    d_sin = math.sin(theta2) - math.sin(theta1)
    d_cos = math.cos(theta2) - math.cos(theta1)
    if direction == HOISTING:
        return w_c * r * (d_sin - mu * d_cos)
    if direction == LOWERING:
        return w_c * r * (d_sin + mu * d_cos)
    raise DomainError(f"direction must be {HOISTING!r} or {LOWERING!r}, got {direction!r}")


def curve_drag_rhs(w_c: float, r: float, mu: float, direction: str = HOISTING):
    """dF/dtheta of the free-body balance on a bend element, for integration."""
    sign = 1.0 if direction == HOISTING else -1.0

    def rhs(theta: float) -> float:
        el = curve_element_forces(w_c, r, mu, theta, 1.0)
        return el.segment_weight * math.cos(theta) + sign * el.friction_force

    return rhs


def curve_element_forces(
    w_c: float, r: float, mu: float, theta: float, d_theta: float
) -> CurveElementForces:
    weight = w_c * r * d_theta
    normal = weight * math.sin(theta)
    return CurveElementForces(theta, weight, normal, mu * normal)


def arc_hookload(case: HookLoadCase) -> HookLoadBreakdown:
    if case.design_kind != "arc":
        raise DomainError("arc_hookload needs an arc case")
    f_heel = heel_drag(case.mu_h, case.w_h, case.horizontal_length)
    f_o = f_heel + case.w_c * case.radius * (case.mu_c + 1.0)
    w_v = case.w_v * case.vertical_length
    return HookLoadBreakdown(f_heel, None, f_o, w_v, f_o + w_v)


def catenary_hookload(case: HookLoadCase) -> HookLoadBreakdown:
    if case.design_kind != "catenary":
        raise DomainError("catenary_hookload needs a catenary case")
    inc = math.radians(case.inclination)
    sin_i = math.sin(inc)
    if sin_i <= 0.0:
        raise DomainError("catenary top inclination must be above vertical")
    # sin/cos of 90 deg are inexact in floating point
    cos_i = 0.0 if case.inclination == 90.0 else math.cos(inc)
    if case.inclination == 90.0:
        sin_i = 1.0
    f_heel = heel_drag(case.mu_h, case.w_h, case.horizontal_length)
    f_ct = f_heel / sin_i
    f_o = f_ct + case.w_c * case.radius * (sin_i + case.mu_c * (1.0 - cos_i))
    w_v = case.w_v * case.vertical_length
    return HookLoadBreakdown(f_heel, f_ct, f_o, w_v, f_o + w_v)


def hookload(case: HookLoadCase) -> HookLoadBreakdown:
    if case.design_kind == "arc":
        return arc_hookload(case)
    return catenary_hookload(case)


def percent_difference(t_arc: float, t_cat: float) -> float:
    """How much larger ``t_arc`` is than ``t_cat``, in percent of ``t_cat``."""
    if not t_cat > 0:
        raise DomainError(f"t_cat must be positive, got {t_cat}")
    return 100.0 * (t_arc - t_cat) / t_cat


def case_as_dict(case: HookLoadCase) -> dict:
    return asdict(case)
