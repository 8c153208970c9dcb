import math

import numpy as np
import pytest

import recipwalk as rw


def test_network_sizes():
    net = rw.build_weighted(3, 2.0)
    assert net.node_count == 65
    assert len(net.arcs) == 128
    assert rw.build_weighted(1, 3.0).out_strength(2) == pytest.approx(4.0)


def test_solve_matches_closed_form():
    for theta in (0.5, 1.0, 2.0):
        for g in (1, 2, 3):
            solved = rw.solve_trapping_times(rw.build_weighted(g, theta)).average
            assert solved == pytest.approx(rw.mfpt_closed(g, theta), rel=1e-10)
    assert rw.mfpt_closed(2, 1.0) == pytest.approx(22.75)


def test_p_matrix_spectrum():
    p = rw.p_matrix(rw.build_weighted(2, 1.0))
    assert p.shape == (16, 16)
    numeric = np.sort(np.linalg.eigvals(p).real)
    decimated = np.array([v for v, mult in rw.spectrum(2, 1.0) for _ in range(mult)])
    np.testing.assert_allclose(numeric, decimated, atol=1e-10)
    assert rw.lambda_min(2, 1.0) == pytest.approx(decimated[0], abs=1e-15)


def test_simulation_and_scaling():
    sim = rw.simulate(rw.build_weighted(1, 1.0), walkers=20000, seed=3)
    assert sim.valid
    assert abs(sim.average - 3.5) <= 4 * sim.average_std_error
    fit = rw.scaling_fit(3.0, 6, 12)
    assert fit["fitted_exponent"] == pytest.approx(2.0, rel=0.02)
    assert rw.scaling_exponent(1.0) == 1.5
    assert math.isclose(rw.growth_factor(1.0), 8.0)


def test_domain_errors():
    with pytest.raises(ValueError):
        rw.build_weighted(2, 0.0)
    with pytest.raises(ValueError):
        rw.solve_trapping_times(rw.build_weighted(0, 1.0))
