"""Glue between well plans and the hook-load models.

Pulls the geometric inputs of a hook-load case (curve radius, top
inclination, vertical and lateral lengths) out of designed plans and
assembles the side-by-side report.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .catenary_design import catenary_params_of, top_of_catenary
from .errors import DomainError
from .loads import HookLoadBreakdown, HookLoadCase, hookload, percent_difference
from .survey import CurveSection, HoldSection, WellPlan

__all__ = ["LoadInputs", "hookload_case", "hookload_report"]


@dataclass(frozen=True)
class LoadInputs:
    """Pipe weights and friction factors, plus optional geometry overrides.

    Any override left as ``None`` is taken from the designed plan.
    """

    mu_h: float = 2.0
    mu_c: float = 0.35
    w_h: float = 16.25
    w_c: float = 91.69
    w_v: float = 19.5
    arc_radius: Optional[float] = None
    arc_vertical_length: Optional[float] = None
    arc_horizontal_length: Optional[float] = None
    cat_radius: Optional[float] = None
    cat_inclination: Optional[float] = None
    cat_vertical_length: Optional[float] = None
    cat_horizontal_length: Optional[float] = None


def _pick(override: Optional[float], derived: float) -> float:
    return derived if override is None else override


def _lateral_length(plan: WellPlan) -> float:
    last = plan.sections[-1]
    if isinstance(last, HoldSection) and last.kind == "horizontal":
        return last.length
    return 0.0


def _kop_tvd(plan: WellPlan) -> float:
    first = plan.sections[0]
    return first.station_at(first.md_end, plan.azimuth).tvd


def hookload_case(plan: WellPlan, loads: LoadInputs) -> HookLoadCase:
    common = dict(mu_h=loads.mu_h, mu_c=loads.mu_c, w_h=loads.w_h, w_c=loads.w_c, w_v=loads.w_v)
    if plan.design_kind == "arc":
        curves = [s for s in plan.sections if isinstance(s, CurveSection)]
        if not curves:
            raise DomainError("arc plan has no build section")
        return HookLoadCase(
            **common,
            horizontal_length=_pick(loads.arc_horizontal_length, _lateral_length(plan)),
            vertical_length=_pick(loads.arc_vertical_length, _kop_tvd(plan)),
            radius=_pick(loads.arc_radius, curves[0].radius),
            design_kind="arc",
        )
    top = top_of_catenary(catenary_params_of(plan))
    return HookLoadCase(
        **common,
        horizontal_length=_pick(loads.cat_horizontal_length, _lateral_length(plan)),
        vertical_length=_pick(loads.cat_vertical_length, _kop_tvd(plan)),
        radius=_pick(loads.cat_radius, top.radius),
        inclination=_pick(loads.cat_inclination, top.inclination),
        design_kind="catenary",
    )


def hookload_report(
    arc_case: HookLoadCase, cat_case: HookLoadCase
) -> tuple[dict, HookLoadBreakdown, HookLoadBreakdown]:
    arc = hookload(arc_case)
    cat = hookload(cat_case)
    report = {
        "inputs": {"arc": asdict(arc_case), "catenary": asdict(cat_case)},
        "arc": arc.as_report(),
        "catenary": cat.as_report(),
        "pct_difference": percent_difference(arc.tension, cat.tension),
    }
    return report, arc, cat
