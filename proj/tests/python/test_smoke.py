"""Smoke tests for the pybind11 module: thin checks that the bindings round
values through correctly; the heavy verification lives in the C++ suites."""

import cmath
import math

import cburgers


def test_version():
    assert cburgers.__version__ == "0.1.0"


def test_burgers_table_row3():
    rows = cburgers.burgers_table(3, a0="1", nu="1")
    assert rows == [(3, "-9", "0"), (5, "27/2", "0"), (9, "-9/2", "0")]


def test_burgers_structural_flags():
    flags = cburgers.burgers_structural_check(6)
    assert flags["ok"] is True
    assert flags["zero_sum"] is True
    assert flags["leading_coeff"] is True


def test_kdvb_table_k2():
    rows = cburgers.kdvb_table(2, [("1", "0"), ("0", "0")], nu="1", alpha="1/2")
    # 6i/(2 - 3i) = -18/13 + 12i/13 at (h,l) = (2,2); the top term negates it
    assert rows[0] == (2, 2, "-18/13", "12/13")
    assert rows[1] == (4, 8, "18/13", "-12/13")


def test_evaluate_mode_matches_closed_form():
    value = cburgers.evaluate_mode(1, [("1", "0")], nu="1", alpha="0", t=1.0)
    assert abs(value - cmath.exp(-1)) < 1e-15


def test_evaluate_field_truncation_indicator():
    value, indicator = cburgers.evaluate_field(2, [("1", "0")], "1", "0", x=math.pi, t=0.0)
    assert abs(value - (-1.0)) < 1e-12  # e^{i pi}, and a_2(0) = 0
    assert indicator == 0.0


def test_partition_count():
    assert cburgers.partition_count(10) == "42"
    assert cburgers.partition_count(100) == "190569292"


def test_hardy_ramanujan_window():
    rep = cburgers.hardy_ramanujan_report(200)
    assert 0.9 <= rep["min_ratio_asym"] <= rep["max_ratio_asym"] <= 1.1


def test_t_ladder_and_t0():
    ladder = cburgers.t_ladder(3, nu="1")
    assert abs(ladder[0] - 0.25 * math.log(3)) < 1e-12
    lower, upper = cburgers.t0_bound(1000, "1")
    assert 0.45 < lower < upper < 0.55


def test_certificate_small():
    cert = cburgers.make_certificate(T="auto", nu="1", A="1.05", K=6, precision=192)
    assert cert["valid"] is True
    assert len(cert["bounds"]) == 6
    for k, value, threshold, ok in cert["bounds"]:
        assert ok and value >= threshold * (1 - 1e-15)


def test_sign_pattern():
    rep = cburgers.verify_sign_pattern(8, a="1", nu="1", t_samples=[0.3, 0.7], precision=192)
    assert rep["all_pass"] is True


def test_nonlinear_term():
    out = cburgers.nonlinear_term([1 + 0j, 0j])
    assert out == [0j, 6j]


def test_sobolev_norm():
    assert abs(cburgers.sobolev_norm([1 + 0j], 1.0, False) - math.sqrt(2)) < 1e-15


def test_simulate_matches_series():
    result = cburgers.simulate([0.4 + 0j], nu="1", alpha="0", N=16, dt=1e-3, t_end=1.0)
    assert result["status"] == "completed"
    exact = cburgers.evaluate_mode(2, [("2/5", "0")], "1", "0", 1.0)
    assert abs(result["final"][1] - exact) / abs(exact) < 1e-7


def test_geometric_bound():
    rep = cburgers.check_geometric_bound(nu="3", alpha="0", a01="1/2", k_max=10,
                                         t0=0.0, t1=5.0, t_count=11)
    assert rep["pass"] is True
    assert rep["worst_ratio"] <= 1 + 1e-12
