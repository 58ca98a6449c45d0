"""Grid/refinement verification of the continuous optimization steps."""

import math

import numpy as np
import pytest

from cyclecount.analytic import (
    OptProblem,
    VerificationError,
    _fd_gradient,
    f,
    f_properties,
    final_constant,
    maximize_g_c,
    maximize_g_uw,
    solve_A,
    verify_mindeg_chain,
    verify_rangec,
)
from cyclecount.bounds import RATIO_UPPER


def test_f_shape():
    r = f_properties()
    assert abs(r.max_value - 1 / math.e) <= 1e-12
    assert abs(r.argmax[0] - 1.0) <= 1e-6
    assert not r.on_boundary
    assert r.certified_upper >= r.max_value
    assert r.info["increasing_below_one"] and r.info["decreasing_above_one"]
    assert r.info["midpoint_concave_on_1_2"]


def test_f_vectorized():
    xs = np.array([0.0, 1.0, 2.0])
    out = f(xs)
    assert out[0] == 0.0 and abs(out[1] - 1 / math.e) < 1e-15
    assert f(1.0) == pytest.approx(1 / math.e)
    assert f(2.0) == pytest.approx(2 * math.e**-2)
    # one concrete concavity instance on [1, 2]
    assert f(1.5) >= (f(1.0) + f(2.0)) / 2


def test_rangec_suprema():
    r = verify_rangec()
    assert abs(r.info["sup_low"] - math.e**2 / 2) <= 1e-12
    assert abs(r.info["sup_high"] - 8 / math.e) <= 1e-12
    assert r.info["sup_low"] < RATIO_UPPER
    assert r.info["sup_high"] < RATIO_UPPER
    assert r.max_value == pytest.approx(math.e**2 / 2)


@pytest.mark.parametrize("c", [2.0, 2.5, 3.0, 4.0])
def test_g_c_boundary_argmax(c):
    r = maximize_g_c(c)
    assert r.on_boundary
    assert r.info["scaled_value"] <= 4.0 * (1 + 1e-9)
    assert r.info["scaled_value"] < RATIO_UPPER
    assert r.info["interior_strict_maxima"] == 0
    # the slack variable sits at its floor on the optimum
    assert r.argmax[0] == pytest.approx(c - 2.0, abs=1e-5)


def test_g_c_scaled_value_at_2_is_exactly_4():
    r = maximize_g_c(2.0)
    assert r.info["scaled_value"] == pytest.approx(4.0, abs=1e-9)


def test_g_c_rejects_out_of_range():
    with pytest.raises(ValueError):
        maximize_g_c(1.9)
    with pytest.raises(ValueError):
        maximize_g_c(4.1)


@pytest.mark.parametrize(
    "params",
    [(1.0, 0.0, 0.0, 0.0), (1.5, 0.0, 0.0, 0.0), (1.9, 0.3, 0.2, 0.1), (1.2, 1.0, 0.5, 0.25)],
)
def test_g_uw_two_ended_slack(params):
    r = maximize_g_uw(*params)
    assert r.on_boundary
    assert r.max_value <= math.exp(-2) * (1 + 1e-6) + 1e-4
    assert r.certified_upper >= r.max_value


def test_g_uw_face_value_matches_closed_form():
    c, xu, xw, z = 1.0, 0.0, 0.0, 0.0
    r = maximize_g_uw(c, xu, xw, z)
    # both degree factors at their constrained floor of 1
    want = f(max(1.0, c - xu)) * f(max(1.0, c - xw))
    assert r.max_value == pytest.approx(want, abs=1e-6)


def test_g_uw_validates_ordering():
    with pytest.raises(ValueError, match="ordering"):
        maximize_g_uw(1.5, 0.1, 0.2, 0.3)  # z above min(xu, xw)
    with pytest.raises(ValueError):
        maximize_g_uw(2.5, 0.0, 0.0, 0.0)  # c out of [1, 2)


@pytest.mark.parametrize("c", [1.0, 1.2, 1.5, 2.0])
@pytest.mark.parametrize("m", [1, 2])
def test_solve_A_closed_form(c, m):
    r = solve_A(c, m)
    zstar = min(c, 1.5)
    want = m * zstar**3 * math.exp(-2 * zstar)
    assert abs(r.max_value - want) <= 1e-3
    assert r.certified_upper >= want - 1e-12


def test_solve_A_m3():
    r = solve_A(2.0, 3, resolution=5e-2)
    want = 3 * 1.5**3 * math.exp(-3.0)
    assert abs(r.max_value - want) <= 1e-2


def test_solve_A_lagrange_relation():
    # at the interior optimum the multiplier equality z = (y^2+y)/(3y-2) holds
    r = solve_A(2.0, 2)
    assert not r.on_boundary
    z, y = r.argmax[0], r.argmax[2]
    assert abs(z - (y * y + y) / (3 * y - 2)) <= 1e-2
    assert r.info["lagrange_ok"]
    assert r.info["fd_gradient_max"] <= 1e-5


def test_solve_A_validates():
    with pytest.raises(ValueError):
        solve_A(0.5, 2)
    with pytest.raises(ValueError):
        solve_A(1.5, 4)


def test_final_constant():
    r = final_constant()
    assert abs(r.max_value - RATIO_UPPER) <= 1e-9
    assert abs(r.argmax[0] - 4 / 3) <= 1e-6
    assert not r.on_boundary
    assert r.info["value_at_one"] == pytest.approx(math.e**2 / 2, abs=1e-9)
    assert r.info["value_at_one_matches_e2_half"]
    # derivative changes sign across the optimum
    left, right = r.info["fd_bracket"]
    assert left > 0 > right
    assert r.info["fd_gradient_max"] <= 1e-5


@pytest.mark.parametrize("c", [2.0, 3.0, 5.0])
def test_mindeg_chain(c):
    r = verify_mindeg_chain(c)
    assert r.max_value == pytest.approx(4.0, abs=1e-12)
    assert r.max_value < RATIO_UPPER
    assert r.info["both_below_four"] and r.info["below_ratio_upper"]
    assert r.info["cubic_chain_at_c"] <= 4.0 * (1 + 1e-12)
    assert r.info["linear_chain_at_c"] <= 4.0 * (1 + 1e-12)


def test_mindeg_chain_values_and_decrease():
    at2 = verify_mindeg_chain(2.0)
    # both expressions hit 4 exactly at c = 2, then fall away
    assert at2.info["cubic_chain_at_c"] == pytest.approx(4.0, abs=1e-12)
    assert at2.info["linear_chain_at_c"] == pytest.approx(4.0, abs=1e-12)
    at25 = verify_mindeg_chain(2.5)
    assert at25.info["cubic_chain_at_c"] < at2.info["cubic_chain_at_c"]
    at3 = verify_mindeg_chain(3.0)
    assert at3.info["linear_chain_at_c"] == pytest.approx(6 / math.e, abs=1e-12)


def test_fd_gradient_matches_analytic():
    def func(xy):
        return xy[0] ** 2 * math.exp(-xy[1])

    g = _fd_gradient(func, [1.5, 0.5])
    assert g[0] == pytest.approx(2 * 1.5 * math.exp(-0.5), abs=1e-5)
    assert g[1] == pytest.approx(-(1.5**2) * math.exp(-0.5), abs=1e-5)


def test_opt_result_json():
    r = solve_A(1.5, 2)
    d = r.to_json_dict()
    assert isinstance(d["max_value"], float)
    assert all(isinstance(x, float) for x in d["argmax"])
    import json

    json.dumps(d)
    p = OptProblem("demo", {"c": 1.5}, {"x": (0.0, 1.0)}, 1e-3)
    json.dumps(p.to_json_dict())


def test_verification_error_is_runtime_error():
    assert issubclass(VerificationError, RuntimeError)
