"""
Tests for the Cauchy estimate checks.
"""
import numpy as np

from cauchy.estimates import verify_cauchy_estimates
from cauchy.solver import solve_cauchy
from models.field import Field, Grid, gaussian


def test_gaussian_data_satisfies_the_estimates(caputo_half, riesz):
    """Test every estimate for a Gaussian under the half-order Caputo kernel."""
    grid = Grid(half_width=40.0, points=1024)
    f = gaussian(grid)
    times = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0]
    report = verify_cauchy_estimates(solve_cauchy(caputo_half, riesz, f, times), f, caputo_half, riesz)
    assert report.passed, report.summary()
    for name in ("l2_contraction", "mk_contraction", "initial_continuity", "time_derivative_bound",
                 "generator_bound", "relaxation_bound", "mk_decay", "positivity", "boundedness"):
        assert not report.get(name).skipped


def test_tempered_kernels_satisfy_the_estimates(tempered_caputo, tempered_riesz):
    """Test the estimates for tempered time and space kernels."""
    grid = Grid(half_width=20.0, points=256)
    f = gaussian(grid, 0.0, 1.5)
    report = verify_cauchy_estimates(solve_cauchy(tempered_caputo, tempered_riesz, f, [0.2, 1.0, 4.0]),
                                     f, tempered_caputo, tempered_riesz)
    assert report.passed, report.summary()


def test_signed_data_skips_positivity(caputo_half, riesz):
    """Test that positivity is only checked for nonnegative data."""
    grid = Grid(half_width=20.0, points=256)
    f = Field.from_function(grid, lambda x: x * np.exp(-x * x))
    report = verify_cauchy_estimates(solve_cauchy(caputo_half, riesz, f, [1.0]), f, caputo_half, riesz)
    assert report.get("positivity").skipped
    assert report.get("initial_continuity").skipped
    assert report.get("l2_contraction").passed


def test_boundary_mass_becomes_a_warning(caputo_half, riesz):
    """Test that density at the window edge is listed in the report warnings."""
    grid = Grid(half_width=5.0, points=256)
    f = gaussian(grid, 0.0, 0.5)
    report = verify_cauchy_estimates(solve_cauchy(caputo_half, riesz, f, [10.0]), f, caputo_half, riesz)
    assert any("boundary" in warning for warning in report.warnings)
