"""Smoke tests for the compiled python module."""

import math

import pytest

import spinfall


def test_chart_round_trip():
    T, X = spinfall.kruskal_from_schwarzschild(0.0, 4.0, 1.0)
    assert T == 0.0
    assert X == pytest.approx(math.e, rel=1e-14)
    t, r = spinfall.schwarzschild_from_kruskal(T, X, 1.0)
    assert t == pytest.approx(0.0, abs=1e-12)
    assert r == pytest.approx(4.0, rel=1e-12)


def test_step_matrix_golden():
    inputs = spinfall.StepInputs()
    inputs.a = spinfall.scalar_a(4.0, 1.0)
    inputs.b = spinfall.scalar_b(4.0, 1.0)
    inputs.beta = 1.0
    inputs.K = 1.0 / 3.0
    inputs.T = 0.1
    inputs.X = math.e
    inputs.dT = 1e-3
    D = spinfall.step_matrix(inputs)
    assert D[0][0].real == pytest.approx(0.99998490504102913, rel=1e-14)
    assert D[0][1].real == pytest.approx(-9.1269807059043967e-5, rel=1e-12)
    assert D[0][0].imag == 0.0


def test_accumulated_map_and_channel():
    worldline = spinfall.integrate_worldline(6.0, 2.2, 1.0, 1.0, 2000)
    assert len(worldline) == 2001
    momentum = spinfall.momentum_from_rapidity(1.0)
    D = spinfall.accumulate(worldline, momentum)
    assert spinfall.unitarity_deviation(D) > 1e-3
    report = spinfall.channel_report(D)
    assert report.params.p < 1.0
    assert report.params.q < 1.0
    assert report.trace_out > 1.0
    assert report.entropy_paper < 0.0
    assert report.bitflip_distance > 0.0


def test_domain_errors_are_mapped():
    with pytest.raises(spinfall.DomainError):
        spinfall.integrate_worldline(6.0, 1.9, 1.0, 1.0, 100)
    with pytest.raises(spinfall.Error):
        spinfall.schwarzschild_from_kruskal(1.2, 0.7, 1.0)
    with pytest.raises(spinfall.DecompositionError):
        spinfall.extract_pq([[1.0, 0.5], [-0.5, 1.0]])


def test_verification_check_runs():
    check = spinfall.check_entropy_invariants()
    assert check.ok
    assert check.value < check.threshold


def test_run_trajectory_rows():
    config = spinfall.RunConfig()
    config.steps = 50
    config.r_end = 2.5
    result = spinfall.run_trajectory(config)
    assert len(result.rows) == 52
    assert result.rows[0].kind == "sample"
    assert result.rows[-1].kind == "summary"
    assert result.rows[0].D[0][0] == 1.0
    csv = spinfall.trajectory_csv(result)
    assert csv.startswith("kind,tau,t,t_over_M,r,r_over_M,")
