"""Hook-load sweeps over lateral friction and curve pipe weight."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DomainError
from .loads import HookLoadCase, hookload, percent_difference

__all__ = [
    "SweepSpec",
    "SensitivityGrid",
    "Violation",
    "SENSITIVITY_HEADER",
    "axis",
    "run_sweep",
    "grid_monotonicity_report",
    "format_sensitivity_csv",
]

SENSITIVITY_HEADER = ("mu", "wc_lbf_per_ft", "t_arc_lbf", "t_cat_lbf", "pct_difference")


def axis(start: float, stop: float, step: float) -> tuple[float, ...]:
    """Inclusive arithmetic axis, rounded so 1.5 + 0.1*k prints cleanly."""
    if not step > 0:
        raise DomainError(f"step must be positive, got {step}")
    n = int(round((stop - start) / step))
    if start + n * step > stop + 1e-9 * max(1.0, abs(stop)):
        n -= 1
    return tuple(round(start + k * step, 10) for k in range(n + 1))


@dataclass(frozen=True)
class SweepSpec:
    base_case_arc: HookLoadCase
    base_case_cat: HookLoadCase
    mu_values: tuple[float, ...] = field(default_factory=lambda: axis(1.5, 2.5, 0.1))
    wc_values: tuple[float, ...] = field(default_factory=lambda: axis(85.0, 95.0, 1.0))

    def __post_init__(self) -> None:
        for name in ("mu_values", "wc_values"):
            vals = getattr(self, name)
            if not vals:
                raise DomainError(f"{name} must be non-empty")
            if any(b <= a for a, b in zip(vals, vals[1:])):
                raise DomainError(f"{name} must be strictly increasing")
        if self.base_case_arc.design_kind != "arc":
            raise DomainError("base_case_arc must be an arc case")
        if self.base_case_cat.design_kind != "catenary":
            raise DomainError("base_case_cat must be a catenary case")


@dataclass(frozen=True)
class SensitivityGrid:
    mu_axis: tuple[float, ...]
    wc_axis: tuple[float, ...]
    t_arc: np.ndarray  # shape (len(mu_axis), len(wc_axis))
    t_cat: np.ndarray
    pct_diff: np.ndarray

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SensitivityGrid):
            return NotImplemented
        return (
            self.mu_axis == other.mu_axis
            and self.wc_axis == other.wc_axis
            and np.array_equal(self.t_arc, other.t_arc)
            and np.array_equal(self.t_cat, other.t_cat)
            and np.array_equal(self.pct_diff, other.pct_diff)
        )


def _cell(spec: SweepSpec, mu: float, wc: float) -> tuple[float, float, float]:
    t_arc = hookload(spec.base_case_arc.with_(mu_h=mu, w_c=wc)).tension
    t_cat = hookload(spec.base_case_cat.with_(mu_h=mu, w_c=wc)).tension
    return t_arc, t_cat, percent_difference(t_arc, t_cat)


def run_sweep(spec: SweepSpec, workers: Optional[int] = None) -> SensitivityGrid:
    """Evaluate both designs at every (mu_h, w_c) pair.

    ``workers`` > 1 evaluates cells on a thread pool; results are identical
    to the serial run since every cell is an independent pure computation.
    """
    cells = [(mu, wc) for mu in spec.mu_values for wc in spec.wc_values]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _cell(spec, *c), cells))
    else:
        results = [_cell(spec, mu, wc) for mu, wc in cells]
    shape = (len(spec.mu_values), len(spec.wc_values))
    arr = np.array(results, dtype=float).reshape(shape + (3,))
    return SensitivityGrid(
        tuple(spec.mu_values),
        tuple(spec.wc_values),
        arr[..., 0].copy(),
        arr[..., 1].copy(),
        arr[..., 2].copy(),
    )


@dataclass(frozen=True)
class Violation:
    design: str
    axis: str  # "mu" or "wc"
    index: tuple[int, int]  # cell whose value dropped below its predecessor
    previous: float
    value: float


def grid_monotonicity_report(grid: SensitivityGrid) -> list[Violation]:
    """List every place where tension decreases along either axis."""
    out = []
    for design, t in (("arc", np.asarray(grid.t_arc)), ("catenary", np.asarray(grid.t_cat))):
        n_mu, n_wc = t.shape
        for i in range(n_mu):
            for j in range(n_wc):
                if i > 0 and t[i, j] < t[i - 1, j]:
                    out.append(Violation(design, "mu", (i, j), float(t[i - 1, j]), float(t[i, j])))
                if j > 0 and t[i, j] < t[i, j - 1]:
                    out.append(Violation(design, "wc", (i, j), float(t[i, j - 1]), float(t[i, j])))
    return out


def sensitivity_rows(grid: SensitivityGrid) -> list[tuple[str, ...]]:
    rows = []
    for i, mu in enumerate(grid.mu_axis):
        for j, wc in enumerate(grid.wc_axis):
            rows.append((
                f"{mu:.2f}",
                f"{wc:.2f}",
                f"{grid.t_arc[i, j]:.2f}",
                f"{grid.t_cat[i, j]:.2f}",
                f"{grid.pct_diff[i, j]:.4f}",
            ))
    return rows


def format_sensitivity_csv(grid: SensitivityGrid) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SENSITIVITY_HEADER)
    writer.writerows(sensitivity_rows(grid))
    return buf.getvalue()

