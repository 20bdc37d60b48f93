"""
Tests for ensemble statistics and their targets.
"""
import numpy as np
import pytest

from cauchy.solver import solve_cauchy
from ctrw.ensemble import simulate_ensemble
from ctrw.statistics import empirical_statistics, l1_distance, pde_target, propagator_target
from models.ensemble import EnsembleResult
from models.field import Grid, gaussian


def ensemble(positions: np.ndarray, times=(1.0,)) -> EnsembleResult:
    positions = np.asarray(positions, dtype=float).reshape(len(positions), len(times))
    return EnsembleResult(particles=len(positions), times=np.asarray(times), positions=positions,
                          seed=0, block_size=4096)


def test_msd_of_symmetric_pair():
    """Test that walkers at -1 and 1 have MSD 1."""
    stats = empirical_statistics(ensemble([-1.0, 1.0]))
    assert stats.msd[0] == pytest.approx(1.0)
    assert ensemble([-1.0, 1.0]).msd[0] == pytest.approx(1.0)


def test_characteristic_function_at_the_origin():
    """Test ECF(0) = 1 with zero standard error."""
    stats = empirical_statistics(ensemble([-3.0, 0.5, 2.0]), xi=(0.0, 1.0))
    assert stats.ecf[0, 0] == 1.0
    assert stats.ecf_stderr[0, 0] == 0.0
    assert stats.ecf[0, 1].real == pytest.approx(np.mean(np.cos([-3.0, 0.5, 2.0])))


def test_histogram_is_a_density():
    """Test that histograms integrate to the fraction of walkers inside the range."""
    positions = np.linspace(-30.0, 30.0, 1000)
    stats = empirical_statistics(ensemble(positions), bins=200, hist_range=(-15.0, 15.0))
    mass = np.sum(stats.histograms[0] * np.diff(stats.bin_edges))
    assert mass == pytest.approx(np.mean(np.abs(positions) < 15.0), abs=1e-3)
    assert len(stats.bin_centers) == 200


def test_walk_target_approaches_the_equation(caputo_half, riesz):
    """Test Z(t, (1 - e^{-eps zeta})/eps) -> Z(t, zeta) as eps -> 0."""
    xi = np.array([0.5, 1.0, 2.0])
    limit = pde_target(caputo_half, riesz, xi, 2.0)
    np.testing.assert_allclose(propagator_target(caputo_half, riesz, xi, 2.0, scale=1e-6), limit, atol=1e-5)
    assert np.all(propagator_target(caputo_half, riesz, xi, 2.0, scale=1.0) > limit)


def test_l1_distance_of_matching_density():
    """Test that a histogram sampled from the field is at distance zero."""
    grid = Grid(half_width=20.0, points=512)
    field = gaussian(grid)
    edges = np.linspace(-10.0, 10.0, 201)
    centers = 0.5 * (edges[1:] + edges[:-1])
    density = np.exp(-0.5 * centers ** 2) / np.sqrt(2.0 * np.pi)
    assert l1_distance(edges, density, field) < 2e-3
    assert l1_distance(edges, np.zeros(200), field) == pytest.approx(1.0, abs=1e-3)


@pytest.mark.slow
def test_walk_histogram_approaches_the_equation(caputo_half, riesz):
    """Test the L1 distance between small-scale walk histograms and the Cauchy solution at t = 1 and 4."""
    times = [1.0, 4.0]
    result = simulate_ensemble(caputo_half, riesz, 100000, times, seed=2024, scale=0.01, threads=4)
    stats = empirical_statistics(result)
    grid = Grid(half_width=40.0, points=2048)
    fields = solve_cauchy(caputo_half, riesz, gaussian(grid, 0.0, 2.0 * grid.dx), times)
    for j, field in enumerate(fields):
        assert l1_distance(stats.bin_edges, stats.histograms[j], field) <= 0.05
