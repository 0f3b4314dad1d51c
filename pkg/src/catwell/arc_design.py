"""Conventional 2D well paths built from circular arcs and straight holds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .constants import build_constant
from .errors import DomainError, InfeasibleDesignError
from .survey import DEFAULT_MD_STEP, CurveSection, HoldSection, Station, WellPlan

__all__ = [
    "ArcDesignInput",
    "kop_depth",
    "propagate_curve",
    "propagate_tangent",
    "design_arc_well",
]


@dataclass(frozen=True)
class ArcDesignInput:
    """Inputs for a build-and-hold design.

    With the optional tangent fields left unset the design is a single build
    from ``initial_inclination`` to ``final_inclination`` at ``build_rate``.
    Setting ``tangent_inclination`` and ``tangent_length`` splits the build
    into an upper curve at ``build_rate``, a slant hold, and a lower curve at
    ``lower_build_rate`` (defaults to ``build_rate``).
    """

    target_depth: float = 12500.0
    azimuth: float = 45.0
    build_rate: float = 0.691
    horizontal_length: float = 7500.0
    final_inclination: float = 90.0
    initial_inclination: float = 0.0
    tangent_inclination: Optional[float] = None
    tangent_length: float = 0.0
    lower_build_rate: Optional[float] = None

    def __post_init__(self) -> None:
        if not self.target_depth > 0:
            raise DomainError("target_depth must be positive")
        if not self.build_rate > 0:
            raise DomainError("build_rate must be positive")
        if self.lower_build_rate is not None and not self.lower_build_rate > 0:
            raise DomainError("lower_build_rate must be positive")
        if not 0.0 <= self.initial_inclination < self.final_inclination <= 90.0:
            raise DomainError("need 0 <= initial_inclination < final_inclination <= 90")
        if self.horizontal_length < 0 or self.tangent_length < 0:
            raise DomainError("section lengths must be non-negative")
        if self.tangent_inclination is not None and not (
            self.initial_inclination <= self.tangent_inclination <= self.final_inclination
        ):
            raise DomainError("tangent_inclination must lie between initial and final")


def kop_depth(
    target_base_vd: float, b: float, i_i: float, i_f: float, exact_constant: bool = False
) -> float:
    """Vertical depth of the kick-off point for a single build of rate ``b``."""
    if not b > 0:
        raise DomainError(f"build rate must be positive, got {b}")
    radius = build_constant(exact_constant) / b
    kop = target_base_vd - radius * (math.sin(math.radians(i_f)) - math.sin(math.radians(i_i)))
    if kop < 0:
        raise InfeasibleDesignError(
            f"build radius {radius:.1f} ft needs more than the {target_base_vd} ft available"
        )
    return kop


def propagate_curve(
    from_: Station, b: float, i2: float, exact_constant: bool = False
) -> Station:
    """Station at the end of a build from ``from_`` to inclination ``i2``."""
    if i2 < from_.inclination:
        raise DomainError(f"drop from {from_.inclination} to {i2} is not supported")
    if i2 == from_.inclination:
        return from_
    sec = CurveSection(
        from_.md, from_.tvd, from_.vsec, from_.inclination, i2, b, exact_constant
    )
    return sec.station_at(sec.md_end, from_.azimuth)


def propagate_tangent(from_: Station, delta_md: float, i_tan: float) -> Station:
    if delta_md < 0:
        raise DomainError(f"delta_md must be >= 0, got {delta_md}")
    if delta_md == 0:
        return from_
    sec = HoldSection(from_.md, from_.tvd, from_.vsec, i_tan, delta_md)
    return sec.station_at(sec.md_end, from_.azimuth)


def _builds(inp: ArcDesignInput) -> list[tuple[str, float, float]]:
    """Ordered (kind, rate_or_length, inclination) legs below the KOP."""
    if inp.tangent_inclination is None:
        return [("curve", inp.build_rate, inp.final_inclination)]
    lower = inp.lower_build_rate if inp.lower_build_rate is not None else inp.build_rate
    return [
        ("curve", inp.build_rate, inp.tangent_inclination),
        ("hold", inp.tangent_length, inp.tangent_inclination),
        ("curve", lower, inp.final_inclination),
    ]


def design_arc_well(
    inp: ArcDesignInput, md_step: float = DEFAULT_MD_STEP, exact_constant: bool = False
) -> WellPlan:
    """Surface hold to KOP, build(s) to the final inclination, then the lateral."""
    legs = _builds(inp)
    k = build_constant(exact_constant)

    # vertical drop consumed below the KOP, so the path lands on target_depth
    below = 0.0
    inc = inp.initial_inclination
    for kind, value, i2 in legs:
        if kind == "curve":
            below += k / value * (math.sin(math.radians(i2)) - math.sin(math.radians(inc)))
        else:
            below += value * math.cos(math.radians(i2))
        inc = i2
    if inp.tangent_inclination is None:
        kop = kop_depth(
            inp.target_depth, inp.build_rate, inp.initial_inclination,
            inp.final_inclination, exact_constant,
        )
    else:
        kop = inp.target_depth - below
        if kop < 0:
            raise InfeasibleDesignError(
                f"build-hold-build needs {below:.1f} ft of vertical depth, "
                f"only {inp.target_depth} available"
            )

    i0 = math.radians(inp.initial_inclination)
    sections: list = [HoldSection(0.0, 0.0, 0.0, inp.initial_inclination, kop / math.cos(i0))]
    for kind, value, i2 in legs:
        end = sections[-1].station_at(sections[-1].md_end, inp.azimuth)
        if kind == "curve":
            if i2 == end.inclination:
                continue
            sections.append(
                CurveSection(end.md, end.tvd, end.vsec, end.inclination, i2, value, exact_constant)
            )
        elif value > 0:
            sections.append(HoldSection(end.md, end.tvd, end.vsec, i2, value))
    end = sections[-1].station_at(sections[-1].md_end, inp.azimuth)
    if inp.horizontal_length > 0:
        sections.append(
            HoldSection(end.md, end.tvd, end.vsec, inp.final_inclination, inp.horizontal_length)
        )
    return WellPlan.build("arc", inp.azimuth, sections, inp, md_step)
