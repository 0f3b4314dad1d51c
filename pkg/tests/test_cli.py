import csv
import json
import re

import pytest

from catwell.charts import MARGIN_LEFT, MARGIN_TOP, PLOT_H, PLOT_W
from catwell.cli import main, run_command
from catwell.config import DesignConfig
from catwell.survey import parse_survey_csv, project_to_plan


def run(tmp_path, *args):
    return main([*args, "--out", str(tmp_path), "-q"])


def polyline_points(svg, name):
    m = re.search(rf'data-series="{re.escape(name)}"[^>]*points="([^"]+)"', svg)
    return [tuple(map(float, p.split(","))) for p in m.group(1).split()]


def domain(svg, axis):
    a, b = re.search(rf'data-{axis}-domain="([^ ]+) ([^"]+)"', svg).groups()
    return float(a), float(b)


def test_design_arc(tmp_path):
    assert run(tmp_path, "design-arc") == 0
    stations = parse_survey_csv((tmp_path / "arc_survey.csv").read_text())
    last = (tmp_path / "arc_survey.csv").read_text().splitlines()[-1].split(",")
    assert last[3] == "12500.00"
    assert stations[-1].section == "horizontal"
    for name in ("arc_vd_vs_hd.svg", "arc_north_vs_east.svg"):
        assert (tmp_path / name).exists()


def test_chart_points_are_csv_rows(tmp_path):
    assert run(tmp_path, "design-catenary") == 0
    rows = list(csv.DictReader(open(tmp_path / "catenary_survey.csv")))
    svg = (tmp_path / "catenary_vd_vs_hd.svg").read_text()
    pts = polyline_points(svg, "catenary")
    assert len(pts) == len(rows)
    x0, x1 = domain(svg, "x")
    y0, y1 = domain(svg, "y")
    for (px, py), row in zip(pts, rows):
        x = x0 + (px - MARGIN_LEFT) / PLOT_W * (x1 - x0)
        y = y0 + (py - MARGIN_TOP) / PLOT_H * (y1 - y0)
        assert abs(x - float(row["vsec_ft"])) <= 0.005 * (x1 - x0) / PLOT_W + 1e-9
        assert abs(y - float(row["tvd_ft"])) <= 0.005 * (y1 - y0) / PLOT_H + 1e-9


def test_survey_roundtrip_invariants(tmp_path):
    assert run(tmp_path, "design-catenary") == 0
    st = parse_survey_csv((tmp_path / "catenary_survey.csv").read_text())
    for a, b in zip(st, st[1:]):
        assert b.md > a.md
        dmd = b.md - a.md
        # rounded to 0.01 ft on both ends
        assert abs(b.tvd - a.tvd) <= dmd + 0.02
        assert abs(b.vsec - a.vsec) <= dmd + 0.02
    for s in st:
        n, e = project_to_plan(s.vsec, s.azimuth)
        assert abs(n - s.north) <= 0.01 and abs(e - s.east) <= 0.01
        assert 0 <= s.inclination <= 90


def test_compare(tmp_path):
    assert run(tmp_path, "compare") == 0
    rows = list(csv.reader(open(tmp_path / "comparison.csv")))
    assert rows[0] == ["md_ft", "design", "tvd_ft", "vsec_ft", "north_ft", "east_ft"]
    assert {r[1] for r in rows[1:]} == {"arc", "catenary"}
    svg = (tmp_path / "compare_north_vs_east.svg").read_text()
    assert 'data-series="arc"' in svg and 'data-series="catenary"' in svg


def test_hookload(tmp_path):
    assert run(tmp_path, "hookload") == 0
    rep = json.loads((tmp_path / "hookload_report.json").read_text())
    keys = {"f_heel_lbf", "f_ct_lbf", "f_o_lbf", "w_v_lbf", "tension_lbf"}
    assert set(rep["arc"]) == keys and set(rep["catenary"]) == keys
    assert abs(rep["arc"]["tension_lbf"] - 1_352_236) <= 0.005 * 1_352_236
    assert abs(rep["catenary"]["tension_lbf"] - 1_092_633) <= 0.005 * 1_092_633
    assert "pct_difference" in rep
    assert rep["inputs"]["arc"]["mu_h"] == 2.0


def test_hookload_with_geometry_overrides(tmp_path):
    cfg = tmp_path / "c.ini"
    cfg.write_text(
        "[loads]\ncat_radius_ft = 9228\ncat_inclination_deg = 42.99\ncat_vertical_length_ft = 4208\n"
    )
    assert main(["hookload", "--config", str(cfg), "--out", str(tmp_path), "-q"]) == 0
    rep = json.loads((tmp_path / "hookload_report.json").read_text())
    assert rep["catenary"]["f_heel_lbf"] == 241_475
    assert abs(rep["catenary"]["f_ct_lbf"] - 354_162) <= 0.005 * 354_162


def test_sensitivity(tmp_path):
    assert run(tmp_path, "sensitivity") == 0
    rows = (tmp_path / "sensitivity.csv").read_text().splitlines()
    assert rows[0] == "mu,wc_lbf_per_ft,t_arc_lbf,t_cat_lbf,pct_difference"
    assert len(rows) - 1 == 121
    assert len(list(tmp_path.glob("hookload_profile_mu_*.svg"))) == 11
    assert len(list(tmp_path.glob("pct_difference_mu_*.svg"))) == 11


def test_md_step_flag(tmp_path):
    assert main(["design-arc", "--out", str(tmp_path), "--md-step", "500", "-q"]) == 0
    n500 = len((tmp_path / "arc_survey.csv").read_text().splitlines())
    assert main(["design-arc", "--out", str(tmp_path), "-q"]) == 0
    n100 = len((tmp_path / "arc_survey.csv").read_text().splitlines())
    assert n500 < n100


def test_charts_disabled(tmp_path):
    cfg = tmp_path / "c.ini"
    cfg.write_text("[output]\ncharts = no\n")
    assert main(["design-arc", "--config", str(cfg), "--out", str(tmp_path / "o"), "-q"]) == 0
    assert sorted(p.name for p in (tmp_path / "o").iterdir()) == ["arc_survey.csv"]


def test_exit_config_error(tmp_path):
    cfg = tmp_path / "c.ini"
    cfg.write_text("[arc]\nbuild_rate_deg_per_100ft = 0\n")
    assert main(["design-arc", "--config", str(cfg), "--out", str(tmp_path / "o"), "-q"]) == 2
    assert not (tmp_path / "o").exists()


def test_exit_infeasible(tmp_path):
    cfg = tmp_path / "c.ini"
    cfg.write_text("[arc]\ntarget_depth_ft = 3000\n")
    assert main(["design-arc", "--config", str(cfg), "--out", str(tmp_path / "o"), "-q"]) == 3
    assert not (tmp_path / "o").exists()


def test_exit_bad_md_step(tmp_path):
    assert main(["design-arc", "--md-step", "0", "--out", str(tmp_path), "-q"]) == 2


def test_exit_io(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert run_command("hookload", DesignConfig(), blocker / "sub") == 5


def test_no_temp_files_left(tmp_path):
    assert run(tmp_path, "compare") == 0
    assert not [p for p in tmp_path.iterdir() if p.name.endswith(".tmp")]


def test_unknown_command():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
