"""Composite catenary well path: vertical, matched arc, catenary, lateral."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catenary import CatenaryParams, evaluate_point, solve_catenary_parameter
from .constants import build_constant
from .errors import ComparisonError, DomainError, InfeasibleDesignError
from .numerics import DEFAULT_TOLERANCE, Tolerance
from .survey import (
    DEFAULT_MD_STEP,
    CatenarySection,
    CurveSection,
    HoldSection,
    WellPlan,
)

__all__ = [
    "CatenaryDesignInput",
    "TopOfCatenary",
    "ComparisonTable",
    "COMPARISON_HEADER",
    "design_catenary_well",
    "top_of_catenary",
    "compare_plans",
]

COMPARISON_HEADER = ("md_ft", "design", "tvd_ft", "vsec_ft", "north_ft", "east_ft")


@dataclass(frozen=True)
class CatenaryDesignInput:
    """Inputs for a catenary design.

    ``total_md`` is carried for reference only; the path length follows from
    the geometry and ``horizontal_length``.
    """

    total_md: float = 24000.0
    target_depth: float = 12500.0
    v_end: float = 2000.0
    s_end: float = 4000.0
    azimuth: float = 45.0
    horizontal_length: float = 7430.0

    def __post_init__(self) -> None:
        if not self.target_depth > self.v_end > 0:
            raise DomainError("need target_depth > v_end > 0")
        if not self.s_end > 0:
            raise DomainError("s_end must be positive")
        if self.horizontal_length < 0:
            raise DomainError("horizontal_length must be non-negative")


@dataclass(frozen=True)
class TopOfCatenary:
    inclination: float  # deg
    radius: float  # ft
    build_rate: float  # deg/100 ft

    def __iter__(self):
        return iter((self.inclination, self.radius, self.build_rate))


def top_of_catenary(params: CatenaryParams, exact_constant: bool = False) -> TopOfCatenary:
    pt = evaluate_point(params, 0.0, exact_constant)
    return TopOfCatenary(pt.inclination, pt.radius, pt.build_rate)


def design_catenary_well(
    inp: CatenaryDesignInput,
    tol: Tolerance = DEFAULT_TOLERANCE,
    md_step: float = DEFAULT_MD_STEP,
    exact_constant: bool = False,
) -> WellPlan:
    """Build the four-section catenary plan.

    The arc above the catenary uses the catenary's top radius, so curvature
    is continuous across the joint, and the KOP is placed so the path lands
    on ``target_depth`` when it turns horizontal.
    """
    params = solve_catenary_parameter(inp.v_end, inp.s_end, tol)
    top = top_of_catenary(params, exact_constant)
    # rate that reproduces the top radius exactly through R = K / b
    arc_rate = build_constant(exact_constant) / top.radius
    kop = inp.target_depth - inp.v_end - top.radius * math.sin(math.radians(top.inclination))
    if kop < 0:
        raise InfeasibleDesignError(
            f"catenary of sag {inp.v_end} ft with top radius {top.radius:.1f} ft "
            f"does not fit above target depth {inp.target_depth} ft"
        )

    vertical = HoldSection(0.0, 0.0, 0.0, 0.0, kop)
    arc = CurveSection(kop, kop, 0.0, 0.0, top.inclination, arc_rate, exact_constant)
    arc_end = arc.station_at(arc.md_end, inp.azimuth)
    cat = CatenarySection(arc.md_end, arc_end.tvd, arc_end.vsec, params, exact_constant)
    sections: list = [vertical, arc, cat]
    if inp.horizontal_length > 0:
        sections.append(
            HoldSection(cat.md_end, arc_end.tvd + inp.v_end, arc_end.vsec + inp.s_end,
                        90.0, inp.horizontal_length)
        )
    return WellPlan.build("catenary", inp.azimuth, sections, inp, md_step)


def catenary_params_of(plan: WellPlan) -> CatenaryParams:
    for sec in plan.sections:
        if isinstance(sec, CatenarySection):
            return sec.params
    raise DomainError("plan has no catenary section")


@dataclass(frozen=True)
class ComparisonTable:
    """Long-format overlay of two plans' station positions."""

    labels: tuple[str, str]
    rows: tuple[tuple[float, str, float, float, float, float], ...]

    def series(self, label: str) -> list[tuple[float, str, float, float, float, float]]:
        return [r for r in self.rows if r[1] == label]

    def differences(self) -> list[tuple[float, float, float, float, float]]:
        """(md, dtvd, dvsec, dnorth, deast) at MDs present in both designs."""
        first = {r[0]: r for r in self.series(self.labels[0])}
        out = []
        for r in self.series(self.labels[1]):
            other = first.get(r[0])
            if other is not None:
                out.append((r[0],) + tuple(a - b for a, b in zip(other[2:], r[2:])))
        return out


def compare_plans(
    arc: WellPlan, cat: WellPlan, labels: tuple[str, str] = ("arc", "catenary")
) -> ComparisonTable:
    if arc.azimuth != cat.azimuth:
        raise ComparisonError(
            f"plans have different azimuths ({arc.azimuth} vs {cat.azimuth})"
        )
    rows = []
    for label, plan in zip(labels, (arc, cat)):
        for st in plan.stations:
            rows.append((st.md, label, st.tvd, st.vsec, st.north, st.east))
    rows.sort(key=lambda r: (r[0], labels.index(r[1])))
    return ComparisonTable(labels, tuple(rows))
