"""Design configuration files.

The format is line oriented::

    # comment
    [arc]
    target_depth_ft = 12500
    build_rate_deg_per_100ft = 0.691

Units are fixed by key name. Every key has a default taken from the
published case study, so an empty file is a complete configuration.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional, Union

from .arc_design import ArcDesignInput
from .catenary_design import CatenaryDesignInput
from .errors import CatwellError, ConfigError, DomainError
from .sensitivity import axis
from .study import LoadInputs

__all__ = ["DesignConfig", "SweepSettings", "OutputSettings", "load_config", "parse_config"]


@dataclass(frozen=True)
class SweepSettings:
    mu_start: float = 1.5
    mu_stop: float = 2.5
    mu_step: float = 0.1
    wc_start: float = 85.0
    wc_stop: float = 95.0
    wc_step: float = 1.0
    workers: int = 1

    def __post_init__(self) -> None:
        if self.mu_stop < self.mu_start or self.wc_stop < self.wc_start:
            raise DomainError("sweep stop values must not be below start values")

    @property
    def mu_values(self) -> tuple[float, ...]:
        return axis(self.mu_start, self.mu_stop, self.mu_step)

    @property
    def wc_values(self) -> tuple[float, ...]:
        return axis(self.wc_start, self.wc_stop, self.wc_step)


@dataclass(frozen=True)
class OutputSettings:
    md_step: float = 100.0
    charts: bool = True


@dataclass(frozen=True)
class DesignConfig:
    arc: ArcDesignInput = field(default_factory=ArcDesignInput)
    catenary: CatenaryDesignInput = field(default_factory=CatenaryDesignInput)
    loads: LoadInputs = field(default_factory=LoadInputs)
    sweep: SweepSettings = field(default_factory=SweepSettings)
    output: OutputSettings = field(default_factory=OutputSettings)


def _positive(x: float) -> bool:
    return x > 0


def _non_negative(x: float) -> bool:
    return x >= 0


def _inclination(x: float) -> bool:
    return 0 <= x <= 90


def _any(x: float) -> bool:
    return True


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "yes", "on", "1"):
        return True
    if low in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


# section -> key -> (field name, parser, check, check description)
Spec = tuple[str, Callable[[str], Any], Callable[[Any], bool], str]
_F, _I = float, int

SCHEMA: dict[str, dict[str, Spec]] = {
    "arc": {
        "target_depth_ft": ("target_depth", _F, _positive, "positive"),
        "azimuth_deg": ("azimuth", _F, _any, ""),
        "build_rate_deg_per_100ft": ("build_rate", _F, _positive, "positive"),
        "horizontal_length_ft": ("horizontal_length", _F, _non_negative, "non-negative"),
        "final_inclination_deg": ("final_inclination", _F, _inclination, "in [0, 90]"),
        "initial_inclination_deg": ("initial_inclination", _F, _inclination, "in [0, 90]"),
        "tangent_inclination_deg": ("tangent_inclination", _F, _inclination, "in [0, 90]"),
        "tangent_length_ft": ("tangent_length", _F, _non_negative, "non-negative"),
        "lower_build_rate_deg_per_100ft": ("lower_build_rate", _F, _positive, "positive"),
    },
    "catenary": {
        "total_md_ft": ("total_md", _F, _positive, "positive"),
        "target_depth_ft": ("target_depth", _F, _positive, "positive"),
        "v_end_ft": ("v_end", _F, _positive, "positive"),
        "s_end_ft": ("s_end", _F, _positive, "positive"),
        "azimuth_deg": ("azimuth", _F, _any, ""),
        "horizontal_length_ft": ("horizontal_length", _F, _non_negative, "non-negative"),
    },
    "loads": {
        "mu_h": ("mu_h", _F, _non_negative, "non-negative"),
        "mu_c": ("mu_c", _F, _non_negative, "non-negative"),
        "w_h_lbf_per_ft": ("w_h", _F, _positive, "positive"),
        "w_c_lbf_per_ft": ("w_c", _F, _positive, "positive"),
        "w_v_lbf_per_ft": ("w_v", _F, _positive, "positive"),
        "arc_radius_ft": ("arc_radius", _F, _positive, "positive"),
        "arc_vertical_length_ft": ("arc_vertical_length", _F, _non_negative, "non-negative"),
        "arc_horizontal_length_ft": ("arc_horizontal_length", _F, _non_negative, "non-negative"),
        "cat_radius_ft": ("cat_radius", _F, _positive, "positive"),
        "cat_inclination_deg": ("cat_inclination", _F, lambda x: 0 < x <= 90, "in (0, 90]"),
        "cat_vertical_length_ft": ("cat_vertical_length", _F, _non_negative, "non-negative"),
        "cat_horizontal_length_ft": ("cat_horizontal_length", _F, _non_negative, "non-negative"),
    },
    "sweep": {
        "mu_start": ("mu_start", _F, _non_negative, "non-negative"),
        "mu_stop": ("mu_stop", _F, _non_negative, "non-negative"),
        "mu_step": ("mu_step", _F, _positive, "positive"),
        "wc_start_lbf_per_ft": ("wc_start", _F, _positive, "positive"),
        "wc_stop_lbf_per_ft": ("wc_stop", _F, _positive, "positive"),
        "wc_step_lbf_per_ft": ("wc_step", _F, _positive, "positive"),
        "workers": ("workers", _I, _positive, "positive"),
    },
    "output": {
        "md_step_ft": ("md_step", _F, _positive, "positive"),
        "charts": ("charts", _bool, _any, ""),
    },
}

_TYPES = {
    "arc": ArcDesignInput,
    "catenary": CatenaryDesignInput,
    "loads": LoadInputs,
    "sweep": SweepSettings,
    "output": OutputSettings,
}

_SECTION_RE = re.compile(r"^\[\s*([A-Za-z_][\w-]*)\s*\]$")


def parse_config(text: str, source: str = "<config>") -> DesignConfig:
    values: dict[str, dict[str, Any]] = {name: {} for name in SCHEMA}
    lines: dict[tuple[str, str], int] = {}
    section: Optional[str] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#;":
            continue
        where = f"{source}:{lineno}"
        m = _SECTION_RE.match(line)
        if m:
            section = m.group(1)
            if section not in SCHEMA:
                raise ConfigError(f"{where}: unknown section [{section}]")
            continue
        if "=" not in line:
            raise ConfigError(f"{where}: expected 'key = value', got {raw!r}")
        if section is None:
            raise ConfigError(f"{where}: key outside of a [section]")
        key, _, value = (part.strip() for part in line.partition("="))
        spec = SCHEMA[section].get(key)
        if spec is None:
            raise ConfigError(f"{where}: unknown key {key!r} in [{section}]")
        if (section, key) in lines:
            raise ConfigError(
                f"{where}: duplicate key {key!r} (first set on line {lines[section, key]})"
            )
        name, parse, check, what = spec
        try:
            parsed = parse(value)
        except ValueError:
            raise ConfigError(f"{where}: {key} = {value!r} is not a valid {parse.__name__}") from None
        if isinstance(parsed, float) and not math.isfinite(parsed):
            raise ConfigError(f"{where}: {key} must be finite")
        if not check(parsed):
            raise ConfigError(f"{where}: {key} must be {what}, got {value}")
        values[section][name] = parsed
        lines[section, key] = lineno

    arc = values["arc"]
    if "tangent_inclination" in arc and "tangent_length" not in arc:
        raise ConfigError(
            f"{source}:{lines['arc', 'tangent_inclination_deg']}: "
            "tangent_inclination_deg requires tangent_length_ft"
        )

    built = {}
    for name, cls in _TYPES.items():
        try:
            built[name] = cls(**values[name])
        except CatwellError as exc:
            raise ConfigError(f"{source}: [{name}] {exc}") from exc
    return DesignConfig(**built)


def load_config(path: Union[str, Path, None]) -> DesignConfig:
    """Read and validate a config file; ``None`` gives the defaults."""
    if path is None:
        return DesignConfig()
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror or exc}") from exc
    return parse_config(text, str(path))
