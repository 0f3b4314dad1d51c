"""Survey stations, well-plan sections and stationization.

Every section evaluates its stations in closed form from its own start
point, so sampling density never changes a station's values.
"""

from __future__ import annotations

import bisect
import csv
import io
import math
from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Sequence, Union

from .catenary import CatenaryParams, catenary_arc_length, evaluate_point, s_at_arc_length
from .constants import build_constant
from .errors import DomainError, PlanConsistencyError

__all__ = [
    "SECTION_TAGS",
    "SURVEY_HEADER",
    "Station",
    "HoldSection",
    "CurveSection",
    "CatenarySection",
    "WellPlan",
    "project_to_plan",
    "stationize",
    "format_survey_csv",
    "parse_survey_csv",
]

SECTION_TAGS = ("vertical", "arc", "catenary", "tangent", "horizontal")

SURVEY_HEADER = (
    "md_ft",
    "inc_deg",
    "azi_deg",
    "tvd_ft",
    "vsec_ft",
    "north_ft",
    "east_ft",
    "build_rate_deg_per_100ft",
    "section",
)

DEFAULT_MD_STEP = 100.0

# tolerances for plan continuity checks
_LENGTH_TOL = 1e-6
_ANGLE_TOL = 1e-6


def project_to_plan(vsec: float, azimuth: float) -> tuple[float, float]:
    """Split a vertical-section displacement into (north, east) components."""
    az = math.radians(azimuth)
    return vsec * math.cos(az), vsec * math.sin(az)


@dataclass(frozen=True)
class Station:
    md: float
    inclination: float
    azimuth: float
    tvd: float
    vsec: float
    north: float
    east: float
    build_rate: float = 0.0
    section: str = "vertical"

    @classmethod
    def at(
        cls,
        md: float,
        inclination: float,
        azimuth: float,
        tvd: float,
        vsec: float,
        build_rate: float = 0.0,
        section: str = "vertical",
    ) -> "Station":
        """Build a station, deriving north/east from ``vsec`` and ``azimuth``."""
        north, east = project_to_plan(vsec, azimuth)
        return cls(md, inclination, azimuth, tvd, vsec, north, east, build_rate, section)


def _hold_tag(inclination: float) -> str:
    if inclination == 0.0:
        return "vertical"
    if inclination == 90.0:
        return "horizontal"
    return "tangent"


@dataclass(frozen=True)
class HoldSection:
    """Straight hole at constant inclination."""

    md_start: float
    tvd_start: float
    vsec_start: float
    inclination: float
    length: float

    def __post_init__(self) -> None:
        if self.length < 0:
            raise DomainError(f"section length must be >= 0, got {self.length}")
        if not 0.0 <= self.inclination <= 90.0:
            raise DomainError(f"inclination {self.inclination} outside [0, 90]")

    @property
    def kind(self) -> str:
        return _hold_tag(self.inclination)

    @property
    def md_end(self) -> float:
        return self.md_start + self.length

    @property
    def inc_start(self) -> float:
        return self.inclination

    @property
    def inc_end(self) -> float:
        return self.inclination

    def curvature(self, md: float) -> float:
        return 0.0

    def station_at(self, md: float, azimuth: float) -> Station:
        dmd = md - self.md_start
        inc = math.radians(self.inclination)
        return Station.at(
            md,
            self.inclination,
            azimuth,
            self.tvd_start + dmd * math.cos(inc),
            self.vsec_start + dmd * math.sin(inc),
            0.0,
            self.kind,
        )


@dataclass(frozen=True)
class CurveSection:
    """Circular build at a constant rate in deg/100 ft.

    Radius and measured depth both follow from the build rate through the
    build constant (``R = K / b``, ``dMD = 100 * dInc / b``).
    """

    md_start: float
    tvd_start: float
    vsec_start: float
    inc_start: float
    inc_end: float
    build_rate: float
    exact_constant: bool = False

    def __post_init__(self) -> None:
        if not self.build_rate > 0:
            raise DomainError(f"build rate must be positive, got {self.build_rate}")
        if self.inc_end < self.inc_start:
            raise DomainError(
                f"drop sections are not supported ({self.inc_start} -> {self.inc_end})"
            )
        if not 0.0 <= self.inc_start <= self.inc_end <= 90.0:
            raise DomainError("curve inclinations must lie in [0, 90]")

    kind = "arc"

    @property
    def radius(self) -> float:
        return build_constant(self.exact_constant) / self.build_rate

    @property
    def md_end(self) -> float:
        return self.md_start + 100.0 * (self.inc_end - self.inc_start) / self.build_rate

    def curvature(self, md: float) -> float:
        return 1.0 / self.radius

    def _point(self, inc_deg: float) -> tuple[float, float]:
        r = self.radius
        i1 = math.radians(self.inc_start)
        i2 = math.radians(inc_deg)
        return (
            self.tvd_start + r * (math.sin(i2) - math.sin(i1)),
            self.vsec_start + r * (math.cos(i1) - math.cos(i2)),
        )

    def station_at(self, md: float, azimuth: float) -> Station:
        if md >= self.md_end:
            inc = self.inc_end
        else:
            inc = self.inc_start + (md - self.md_start) * self.build_rate / 100.0
        tvd, vsec = self._point(inc)
        return Station.at(md, inc, azimuth, tvd, vsec, self.build_rate, self.kind)


@dataclass(frozen=True)
class CatenarySection:
    """Catenary build from its top inclination to horizontal."""

    md_start: float
    tvd_start: float
    vsec_start: float
    params: CatenaryParams
    exact_constant: bool = False

    kind = "catenary"

    @property
    def length(self) -> float:
        return catenary_arc_length(self.params, 0.0, self.params.s_end)

    @property
    def md_end(self) -> float:
        return self.md_start + self.length

    @property
    def inc_start(self) -> float:
        return evaluate_point(self.params, 0.0).inclination

    @property
    def inc_end(self) -> float:
        return 90.0

    def _s_at(self, md: float) -> float:
        return s_at_arc_length(self.params, min(max(md - self.md_start, 0.0), self.length))

    def curvature(self, md: float) -> float:
        return abs(evaluate_point(self.params, self._s_at(md)).curvature)

    def station_at(self, md: float, azimuth: float) -> Station:
        if md >= self.md_end:
            s = self.params.s_end
        else:
            s = self._s_at(md)
        pt = evaluate_point(self.params, s, self.exact_constant)
        inc = 90.0 if s == self.params.s_end else pt.inclination
        v = self.params.v_end if s == self.params.s_end else pt.v
        return Station.at(
            md, inc, azimuth, self.tvd_start + v, self.vsec_start + s, pt.build_rate, self.kind
        )


Section = Union[HoldSection, CurveSection, CatenarySection]


@dataclass(frozen=True)
class WellPlan:
    design_kind: str
    azimuth: float
    sections: tuple[Section, ...]
    inputs: Any = None
    stations: tuple[Station, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.design_kind not in ("arc", "catenary"):
            raise PlanConsistencyError(f"unknown design kind {self.design_kind!r}")
        _check_sections(self.sections, self.azimuth)

    @classmethod
    def build(
        cls,
        design_kind: str,
        azimuth: float,
        sections: Sequence[Section],
        inputs: Any = None,
        md_step: float = DEFAULT_MD_STEP,
    ) -> "WellPlan":
        plan = cls(design_kind, azimuth, tuple(sections), inputs)
        return replace(plan, stations=tuple(stationize(plan, md_step)))

    @property
    def md_total(self) -> float:
        return self.sections[-1].md_end

    def station_at(self, md: float) -> Station:
        return _owning_section(self.sections, md).station_at(md, self.azimuth)

    def boundary_mds(self) -> list[float]:
        return [s.md_start for s in self.sections] + [self.sections[-1].md_end]


def _owning_section(sections: Sequence[Section], md: float) -> Section:
    if md < sections[0].md_start or md > sections[-1].md_end + _LENGTH_TOL:
        raise DomainError(f"md {md} outside plan")
    starts = [s.md_start for s in sections]
    # a boundary belongs to the section that starts there
    idx = bisect.bisect_right(starts, md) - 1
    return sections[max(idx, 0)]


def _check_sections(sections: Sequence[Section], azimuth: float) -> None:
    if not sections:
        raise PlanConsistencyError("plan has no sections")
    if sections[0].md_start != 0.0:
        raise PlanConsistencyError("plan must start at md 0")
    for prev, nxt in zip(sections, sections[1:]):
        if abs(prev.md_end - nxt.md_start) > _LENGTH_TOL:
            raise PlanConsistencyError(
                f"gap/overlap between {prev.kind} and {nxt.kind}: "
                f"{prev.md_end} != {nxt.md_start}"
            )
        a = prev.station_at(prev.md_end, azimuth)
        b = nxt.station_at(nxt.md_start, azimuth)
        if abs(a.inclination - b.inclination) > _ANGLE_TOL:
            raise PlanConsistencyError(
                f"inclination jump {a.inclination} -> {b.inclination} at md {nxt.md_start}"
            )
        if abs(a.tvd - b.tvd) > _LENGTH_TOL or abs(a.vsec - b.vsec) > _LENGTH_TOL:
            raise PlanConsistencyError(f"position jump at md {nxt.md_start}")


def stationize(plan: WellPlan, md_step: float = DEFAULT_MD_STEP) -> list[Station]:
    """Sample ``plan`` at every multiple of ``md_step`` and at every section boundary."""
    if not md_step > 0:
        raise DomainError(f"md_step must be positive, got {md_step}")
    boundaries = plan.boundary_mds()
    total = boundaries[-1]
    mds = set(boundaries)
    k = 0
    while True:
        md = k * md_step
        if md > total:
            break
        if all(abs(md - b) > _LENGTH_TOL for b in boundaries):
            mds.add(md)
        k += 1
    return [plan.station_at(md) for md in sorted(mds)]


def fmt_fixed(x: float, digits: int) -> str:
    """Fixed-point text that never renders negative zero."""
    text = f"{x:.{digits}f}"
    if text.startswith("-") and float(text) == 0.0:
        text = text[1:]
    return text


def survey_row(st: Station) -> list[str]:
    return [
        fmt_fixed(st.md, 2),
        fmt_fixed(st.inclination, 3),
        fmt_fixed(st.azimuth, 3),
        fmt_fixed(st.tvd, 2),
        fmt_fixed(st.vsec, 2),
        fmt_fixed(st.north, 2),
        fmt_fixed(st.east, 2),
        fmt_fixed(st.build_rate, 3),
        st.section,
    ]


def format_survey_csv(stations: Iterable[Station]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SURVEY_HEADER)
    for st in stations:
        writer.writerow(survey_row(st))
    return buf.getvalue()


def parse_survey_csv(text: str) -> list[Station]:
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != SURVEY_HEADER:
        raise ValueError(f"unexpected survey header {header}")
    out = []
    for row in reader:
        *nums, section = row
        md, inc, azi, tvd, vsec, north, east, br = map(float, nums)
        out.append(Station(md, inc, azi, tvd, vsec, north, east, br, section))
    return out
