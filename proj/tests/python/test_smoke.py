"""Smoke tests for the python bindings against the worked reference problem."""

import math

import pytest

import bnpick


def reference_system():
    return bnpick.build_pick_system([1, -1], [1, -1], [1.0, 0.0])


def test_pick_system():
    sys = reference_system()
    assert sys.kappa == 1
    assert not sys.singular
    assert sys.P[0][0] == pytest.approx(1.0)
    assert sys.P[1][1] == pytest.approx(0.0)
    assert sys.p_tilde_diag[1] == pytest.approx(-1.0)
    assert bnpick.verify_stein(sys) < 1e-12
    assert not bnpick.problems_equivalent(sys)
    assert bnpick.omission_feasibility(sys, [0]) == {"kind": "unique", "degree": 0}
    assert bnpick.omission_feasibility(sys, [1]) == {"kind": "many"}
    assert bnpick.omission_feasibility(sys, [0, 1]) == {"kind": "infeasible"}


def test_data_validation():
    with pytest.raises(ValueError):
        bnpick.build_pick_system([0.5], [1], [0.0])


def test_theta():
    th = bnpick.build_theta(reference_system(), mu=1j)
    assert th.eta[0] == pytest.approx(-1)
    assert th.eta[1] == pytest.approx(1j)
    assert th.thresholds[0] == pytest.approx(0.0, abs=1e-12)
    assert th.thresholds[1] == pytest.approx(0.5)
    at_mu = th.eval(1j)
    assert at_mu[0][0] == pytest.approx(1) and at_mu[0][1] == pytest.approx(0)
    prod_point = 0.3 + 0.1j
    g = th.eval(prod_point)
    gi = th.inverse_eval(prod_point)
    assert g[0][0] * gi[0][0] + g[0][1] * gi[1][0] == pytest.approx(1, abs=1e-10)


def test_solve_constant_parameter():
    sys = reference_system()
    th = bnpick.build_theta(sys, mu=1j)
    e = bnpick.constant_parameter(-1)
    assert bnpick.classify(e, th) == ["C6", "C1"]
    w = bnpick.apply_parameter(th, e)
    assert w.is_rational
    assert w.eval(0.2 + 0.3j) == pytest.approx(-1)
    assert w.neg_squares() == 0
    rep = bnpick.verify_interpolation(w, sys, th, e)
    assert rep["membership"]["in_S16"] is True
    assert rep["membership"]["in_S14"] is False
    assert rep["node_reports"][0]["satisfied_0_13"] is False
    assert rep["node_reports"][1]["satisfied_0_13"] is True


def test_solve_rational_parameter():
    sys = reference_system()
    th = bnpick.build_theta(sys, mu=1j)
    e = bnpick.rational_parameter([2, 2j], [-1 - 3j, 1 - 1j])
    assert bnpick.classify(e, th) == ["C1", "C5"]
    w = bnpick.apply_parameter(th, e)
    # monic form (-iz - 1)/(z - 2 - i)
    assert w.denominator[0] == pytest.approx(-2 - 1j, abs=1e-9)
    assert w.numerator[1] == pytest.approx(-1j, abs=1e-9)
    n_pos, n_neg, n_zero = bnpick.fmi_kernel_check(w, sys)
    assert n_neg == sys.kappa


def test_degenerate():
    sys = bnpick.build_pick_system([1, -1], [1, -1], [1.0, 1.0])
    assert sys.singular
    sol = bnpick.solve_degenerate(sys)
    assert sol["rank_P"] == 1
    # w(z) = z
    num = sol["w"]["numerator"]
    assert num[1][0] == pytest.approx(1.0, abs=1e-9)
    assert abs(complex(num[0][0], num[0][1])) < 1e-9
    classical = bnpick.classical_singular_solution(sys)
    assert classical["numerator"][1][0] == pytest.approx(1.0, abs=1e-9)


def test_opaque_parameter():
    sys = reference_system()
    th = bnpick.build_theta(sys, mu=1j)
    e = bnpick.opaque_parameter(lambda z: 0.5 * z, name="half-z")
    bd = e.boundary_data(1.0)
    assert bd["estimated"] is True
    w = bnpick.apply_parameter(th, e)
    assert not w.is_rational
    assert abs(w.eval(0.2)) < 10  # evaluates through the coefficient matrix
