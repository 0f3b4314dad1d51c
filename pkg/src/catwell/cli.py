"""``catwell`` command line interface.

Every command computes all of its artifacts in memory first and then writes
them one by one through a temporary file and an atomic rename.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .arc_design import design_arc_well
from .catenary_design import COMPARISON_HEADER, compare_plans, design_catenary_well
from .charts import ChartSpec, Series, render_svg
from .config import DesignConfig, load_config
from .errors import (
    CatwellError,
    ConfigError,
    DomainError,
    InfeasibleDesignError,
    NumericError,
)
from .sensitivity import SweepSpec, format_sensitivity_csv, run_sweep, sensitivity_rows
from .study import hookload_case, hookload_report
from .survey import WellPlan, fmt_fixed, format_survey_csv, survey_row

log = logging.getLogger("catwell")

COMMANDS = ("design-arc", "design-catenary", "compare", "hookload", "sensitivity")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INFEASIBLE = 3
EXIT_NUMERIC = 4
EXIT_IO = 5

Artifacts = dict[str, str]


def _design_artifacts(plan: WellPlan, label: str, charts: bool) -> Artifacts:
    rows = [survey_row(st) for st in plan.stations]
    out = {f"{label}_survey.csv": format_survey_csv(plan.stations)}
    if charts:
        # charts are drawn from the rounded CSV values, never recomputed
        vs_hd = tuple((float(r[4]), float(r[3])) for r in rows)
        n_e = tuple((float(r[6]), float(r[5])) for r in rows)
        title = f"{label.capitalize()} design"
        out[f"{label}_vd_vs_hd.svg"] = render_svg(ChartSpec(
            "vd_vs_hd", f"{title}: vertical vs horizontal displacement",
            "Horizontal displacement (ft)", "Vertical depth (ft)",
            (Series(label, vs_hd),), invert_y=True,
        ))
        out[f"{label}_north_vs_east.svg"] = render_svg(ChartSpec(
            "north_vs_east", f"{title}: north vs east displacement",
            "East (ft)", "North (ft)", (Series(label, n_e),),
        ))
    return out


def _comparison_artifacts(arc: WellPlan, cat: WellPlan, charts: bool) -> Artifacts:
    table = compare_plans(arc, cat)
    rows = [
        (fmt_fixed(md, 2), label, *(fmt_fixed(v, 2) for v in (tvd, vsec, n, e)))
        for md, label, tvd, vsec, n, e in table.rows
    ]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COMPARISON_HEADER)
    writer.writerows(rows)
    out = {"comparison.csv": buf.getvalue()}
    if charts:
        vd, ne = [], []
        for label in table.labels:
            mine = [r for r in rows if r[1] == label]
            vd.append(Series(label, tuple((float(r[3]), float(r[2])) for r in mine)))
            ne.append(Series(label, tuple((float(r[5]), float(r[4])) for r in mine)))
        out["compare_vd_vs_hd.svg"] = render_svg(ChartSpec(
            "vd_vs_hd", "Trajectory comparison: vertical vs horizontal displacement",
            "Horizontal displacement (ft)", "Vertical depth (ft)", tuple(vd), invert_y=True,
        ))
        out["compare_north_vs_east.svg"] = render_svg(ChartSpec(
            "north_vs_east", "Trajectory comparison: north vs east displacement",
            "East (ft)", "North (ft)", tuple(ne),
        ))
    return out


def _plans(cfg: DesignConfig, md_step: float) -> tuple[WellPlan, WellPlan]:
    return (
        design_arc_well(cfg.arc, md_step),
        design_catenary_well(cfg.catenary, md_step=md_step),
    )


def _hookload_artifacts(cfg: DesignConfig, md_step: float) -> Artifacts:
    arc, cat = _plans(cfg, md_step)
    report, _, _ = hookload_report(hookload_case(arc, cfg.loads), hookload_case(cat, cfg.loads))
    return {"hookload_report.json": json.dumps(report, indent=2) + "\n"}


def _sensitivity_artifacts(cfg: DesignConfig, md_step: float, charts: bool) -> Artifacts:
    arc, cat = _plans(cfg, md_step)
    spec = SweepSpec(
        hookload_case(arc, cfg.loads),
        hookload_case(cat, cfg.loads),
        cfg.sweep.mu_values,
        cfg.sweep.wc_values,
    )
    grid = run_sweep(spec, workers=cfg.sweep.workers)
    out = {"sensitivity.csv": format_sensitivity_csv(grid)}
    if charts:
        rows = sensitivity_rows(grid)
        for mu in grid.mu_axis:
            mine = [r for r in rows if r[0] == f"{mu:.2f}"]
            t_arc = tuple((float(r[1]), float(r[2])) for r in mine)
            t_cat = tuple((float(r[1]), float(r[3])) for r in mine)
            pct = tuple((float(r[1]), float(r[4])) for r in mine)
            out[f"hookload_profile_mu_{mu:.2f}.svg"] = render_svg(ChartSpec(
                "hookload_profile", f"Hook load profile, mu = {mu:.2f}",
                "Curve pipe weight (lbf/ft)", "Hook load (lbf)",
                (Series("arc", t_arc), Series("catenary", t_cat)),
            ))
            out[f"pct_difference_mu_{mu:.2f}.svg"] = render_svg(ChartSpec(
                "pct_difference", f"Hook load difference, mu = {mu:.2f}",
                "Curve pipe weight (lbf/ft)", "Difference (%)",
                (Series("arc vs catenary", pct),),
            ))
    return out


def build_artifacts(cmd: str, cfg: DesignConfig, md_step: Optional[float] = None) -> Artifacts:
    step = cfg.output.md_step if md_step is None else md_step
    if not step > 0:
        raise ConfigError(f"--md-step must be positive, got {step}")
    charts = cfg.output.charts
    if cmd == "design-arc":
        return _design_artifacts(design_arc_well(cfg.arc, step), "arc", charts)
    if cmd == "design-catenary":
        return _design_artifacts(design_catenary_well(cfg.catenary, md_step=step), "catenary", charts)
    if cmd == "compare":
        return _comparison_artifacts(*_plans(cfg, step), charts)
    if cmd == "hookload":
        return _hookload_artifacts(cfg, step)
    if cmd == "sensitivity":
        return _sensitivity_artifacts(cfg, step, charts)
    raise ConfigError(f"unknown command {cmd!r}")


def atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def run_command(cmd: str, config: DesignConfig, out_dir: Path, md_step: Optional[float] = None) -> int:
    """Compute and write the artifacts of ``cmd``; return the exit status."""
    try:
        artifacts = build_artifacts(cmd, config, md_step)
    except ConfigError as exc:
        log.error("config error: %s", exc)
        return EXIT_CONFIG
    except InfeasibleDesignError as exc:
        log.error("infeasible design: %s", exc)
        return EXIT_INFEASIBLE
    except NumericError as exc:
        log.error("numeric error: %s", exc)
        return EXIT_NUMERIC
    except DomainError as exc:
        log.error("invalid input: %s", exc)
        return EXIT_CONFIG
    except CatwellError as exc:
        log.error("%s", exc)
        return EXIT_NUMERIC

    out_dir = Path(out_dir)
    for name in sorted(artifacts):
        path = out_dir / name
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
            atomic_write(path, artifacts[name])
        except OSError as exc:
            log.error("cannot write %s: %s", path, exc.strerror or exc)
            return EXIT_IO
        log.info("wrote %s", path)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="catwell",
        description="Catenary and arc well-path design with soft-string hook loads.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "design-arc": "survey and charts for the build-and-hold design",
        "design-catenary": "survey and charts for the catenary design",
        "compare": "overlay table and charts for both designs",
        "hookload": "hook-load breakdown for both designs",
        "sensitivity": "hook-load sweep over lateral friction and curve pipe weight",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, help=helps[name])
        sp.add_argument("--config", type=Path, default=None, help="config file (default: case study)")
        sp.add_argument("--out", type=Path, default=Path("."), help="output directory")
        sp.add_argument("--md-step", type=float, default=None, help="station spacing in ft (default 100)")
        sp.add_argument("-q", "--quiet", action="store_true", help="only report errors")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(message)s",
        stream=sys.stderr,
    )
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        log.error("config error: %s", exc)
        return EXIT_CONFIG
    return run_command(args.command, cfg, args.out, args.md_step)


if __name__ == "__main__":
    sys.exit(main())
