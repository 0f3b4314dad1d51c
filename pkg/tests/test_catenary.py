import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catwell.catenary import (
    CatenaryParams,
    catenary_arc_length,
    evaluate_point,
    s_at_arc_length,
    sag_residual,
    slope,
    solve_catenary_parameter,
    vertical_displacement,
)
from catwell.constants import BUILD_CONSTANT, EXACT_BUILD_CONSTANT
from catwell.errors import DomainError

import oracles

# grid-scan oracle for v_end=2000, s_end=4000
A_CASE = 4297.280753038442
A_UNIT = 1000.0
V_UNIT = 1000.0 * (math.cosh(1.0) - 1.0)


@pytest.fixture(scope="module")
def case():
    return solve_catenary_parameter(2000.0, 4000.0)


def test_case_study_parameter(case):
    assert math.isclose(case.a, A_CASE, abs_tol=1e-5)
    assert abs(case.a - 4297.3) <= 0.5
    assert abs(case.residual) < 1e-6


def test_parameter_by_construction():
    p = solve_catenary_parameter(V_UNIT, 1000.0)
    assert math.isclose(p.a, A_UNIT, abs_tol=1e-6)


def test_small_sag_hint_is_lower_bound():
    hint = 4000.0**2 / (2 * 2000.0)
    assert hint == 4000.0
    assert sag_residual(hint, 4000.0, 2000.0) > 0
    assert A_CASE > hint


@pytest.mark.parametrize("v,s", [(0, 100), (-1, 100), (100, 0)])
def test_solve_rejects_non_positive(v, s):
    with pytest.raises(DomainError):
        solve_catenary_parameter(v, s)


def test_residual_monotone_decreasing():
    a = np.sort(np.random.default_rng(1).uniform(50, 1e5, 500))
    g = [sag_residual(x, 4000.0, 0.0) for x in a]
    assert all(g1 < g0 for g0, g1 in zip(g, g[1:]))


def test_boundaries(case):
    assert vertical_displacement(case, case.s_end) == case.v_end
    assert abs(vertical_displacement(case, 0.0)) < 1e-6


def test_vertical_displacement_mid():
    p = CatenaryParams(4297.3, 4000.0, 2000.0)
    expected = oracles.catenary_v_direct(4297.3, 4000.0, 2000.0, 2000.0)
    assert math.isclose(vertical_displacement(p, 2000.0), expected, rel_tol=1e-12)
    assert math.isclose(vertical_displacement(p, 2000.0), 1526.13, abs_tol=0.01)


def test_out_of_range(case):
    for s in (-1.0, case.s_end + 1.0):
        with pytest.raises(DomainError):
            vertical_displacement(case, s)
        with pytest.raises(DomainError):
            evaluate_point(case, s)


def test_top_point_matches_case_study(case):
    top = evaluate_point(case, 0.0)
    assert abs(top.radius - 9228) <= 0.005 * 9228
    assert abs(top.inclination - 42.99) <= 0.1
    assert math.isclose(top.radius, 9228.101946690207, rel_tol=1e-9)
    assert math.isclose(top.inclination, 43.031677098275566, abs_tol=1e-8)


def test_end_point(case):
    end = evaluate_point(case, case.s_end)
    assert end.slope == 0.0
    assert end.inclination == 90.0
    assert end.radius == case.a


def test_point_relations(case):
    for s in np.linspace(0, case.s_end, 17):
        pt = evaluate_point(case, float(s))
        assert pt.curvature < 0
        assert math.isclose(pt.radius * abs(pt.curvature), 1.0, rel_tol=1e-14)
        assert pt.build_rate == BUILD_CONSTANT * abs(pt.curvature)
        assert 0 < pt.inclination <= 90
        assert math.isclose(pt.radius, case.a * math.cosh((case.s_end - s) / case.a) ** 2, rel_tol=1e-12)


def test_exact_constant_flag(case):
    pt = evaluate_point(case, 0.0, exact_constant=True)
    assert pt.build_rate == EXACT_BUILD_CONSTANT * abs(pt.curvature)


def test_inclination_increasing(case):
    inc = [evaluate_point(case, float(s)).inclination for s in np.linspace(0, case.s_end, 101)]
    assert all(b > a for a, b in zip(inc, inc[1:]))


def test_finite_difference_consistency():
    rng = random.Random(7)
    for _ in range(20):
        s_end = rng.uniform(500, 8000)
        v_end = rng.uniform(0.05, 2.0) * s_end
        p = solve_catenary_parameter(v_end, s_end)
        h = 1e-3 * p.a
        V = lambda s: vertical_displacement(p, s)
        for _ in range(20):
            s = rng.uniform(h, s_end - h)
            fd = oracles.central_difference(V, s, h)
            assert math.isclose(fd, slope(p, s), rel_tol=1e-6)


def test_arc_length_zero(case):
    assert catenary_arc_length(case, 1234.0, 1234.0) == 0.0


def test_arc_length_quadrature(case):
    total = catenary_arc_length(case, 0.0, case.s_end)
    quad = oracles.midpoint_quadrature(oracles.arc_length_integrand(case.a, case.s_end), 0.0, case.s_end)
    assert math.isclose(total, quad, rel_tol=1e-6)
    assert math.isclose(total, 4603.16, abs_tol=0.01)


def test_arc_length_order(case):
    with pytest.raises(DomainError):
        catenary_arc_length(case, 10.0, 5.0)


@settings(max_examples=100, deadline=None)
@given(
    s_end=st.floats(100, 1e4),
    ratio=st.floats(0.01, 3.0),
    f1=st.floats(0, 1),
    f2=st.floats(0, 1),
)
def test_arc_length_bounds_chord(s_end, ratio, f1, f2):
    p = solve_catenary_parameter(ratio * s_end, s_end)
    s1, s2 = sorted((f1 * s_end, f2 * s_end))
    assert catenary_arc_length(p, s1, s2) >= (s2 - s1) * (1 - 1e-12) - 1e-300
    l = catenary_arc_length(p, 0.0, s2)
    assert math.isclose(s_at_arc_length(p, l), s2, rel_tol=1e-9, abs_tol=1e-6)


@settings(max_examples=100, deadline=None)
@given(s_end=st.floats(10, 1e5), ratio=st.floats(1e-3, 10.0))
def test_solved_params_satisfy_boundary(s_end, ratio):
    v_end = ratio * s_end
    p = solve_catenary_parameter(v_end, s_end)
    assert abs(vertical_displacement(p, 0.0)) <= 1e-6 * max(1.0, v_end)
