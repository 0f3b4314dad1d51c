import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catwell.errors import BracketError, ConvergenceError, DomainError, NumericError
from catwell.numerics import Tolerance, find_root_bracketed, integrate_ode_1d

TIGHT = Tolerance(abs_tol=1e-9)


def test_linear_root():
    assert math.isclose(find_root_bracketed(lambda x: x - 3, 0, 10, TIGHT), 3.0, abs_tol=1e-9)


def test_sqrt2():
    root = find_root_bracketed(lambda x: x * x - 2, 0, 2, TIGHT)
    assert math.isclose(root, math.sqrt(2), abs_tol=1e-9)


def test_catenary_residual_root_matches_grid_scan():
    # grid-scan oracle (tests/oracles.py) gives 4297.280753038442
    f = lambda a: a * (math.cosh(4000 / a) - 1) - 2000
    root = find_root_bracketed(f, 100, 1e6)
    assert math.isclose(root, 4297.280753038442, abs_tol=1e-5)
    assert math.isclose(root, 4297.3, abs_tol=0.05)


def test_no_sign_change():
    with pytest.raises(BracketError):
        find_root_bracketed(lambda x: x * x + 1, -1, 1)


def test_max_iterations():
    with pytest.raises(ConvergenceError):
        find_root_bracketed(lambda x: x - 0.3, 0, 1, Tolerance(1e-12, max_iterations=5))


def test_endpoint_root():
    assert find_root_bracketed(lambda x: x, 0.0, 1.0) == 0.0


def test_nan_rejected():
    with pytest.raises(NumericError):
        find_root_bracketed(lambda x: math.nan, 0.0, 1.0)


@pytest.mark.parametrize("kwargs", [dict(abs_tol=0), dict(abs_tol=-1), dict(max_iterations=0)])
def test_tolerance_validation(kwargs):
    with pytest.raises(DomainError):
        Tolerance(**kwargs)


@settings(max_examples=200, deadline=None)
@given(
    root=st.floats(-1e3, 1e3),
    left=st.floats(1e-3, 1e3),
    right=st.floats(1e-3, 1e3),
    power=st.sampled_from([1, 3, 5]),
)
def test_root_in_bracket_and_no_worse_than_ends(root, left, right, power):
    f = lambda x: (x - root) ** power
    lo, hi = root - left, root + right
    x = find_root_bracketed(f, lo, hi, Tolerance(1e-9))
    assert lo <= x <= hi
    assert abs(f(x)) <= abs(f(lo)) and abs(f(x)) <= abs(f(hi))
    assert find_root_bracketed(f, lo, hi, Tolerance(1e-9)) == x


def test_bracket_halves_each_iteration():
    widths = []

    def f(x):
        widths.append(x)
        return x - 0.123456

    find_root_bracketed(f, 0.0, 1.0, Tolerance(1e-6))
    mids = widths[2:]
    # successive midpoints move by exactly half of the previous move
    steps = [abs(b - a) for a, b in zip(mids, mids[1:])]
    for s0, s1 in zip(steps, steps[1:]):
        assert s1 <= 0.5 * s0 + 1e-15


def test_zero_rhs():
    assert integrate_ode_1d(lambda t: 0.0, 0.0, math.pi / 2, 100.0, 10) == 100.0


def test_integrate_cos():
    val = integrate_ode_1d(math.cos, 0.0, math.pi / 2, 0.0, 1000)
    assert abs(val - 1.0) <= 1e-9


def test_integrate_drag_rhs():
    mu = 0.35
    val = integrate_ode_1d(lambda t: math.cos(t) + mu * math.sin(t), 0.0, math.pi / 2, 0.0)
    assert abs(val - 1.35) <= 1e-8


def test_fourth_order_convergence():
    exact = math.e - 1.0
    errs = [abs(integrate_ode_1d(math.exp, 0.0, 1.0, 0.0, n) - exact) for n in (2, 4, 8, 16)]
    for e0, e1 in zip(errs, errs[1:]):
        assert e0 / e1 >= 8.0


def test_integrate_rejects_bad_input():
    with pytest.raises(DomainError):
        integrate_ode_1d(math.cos, 0.0, 1.0, 0.0, 0)
    with pytest.raises(DomainError):
        integrate_ode_1d(math.cos, 1.0, 0.0, 0.0, 10)
    with pytest.raises(NumericError):
        integrate_ode_1d(lambda t: math.inf, 0.0, 1.0, 0.0, 10)
