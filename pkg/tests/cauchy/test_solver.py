"""
Tests for the spectral Cauchy solver.
"""
import numpy as np
import pytest

from cauchy.norms import norm_l2, norm_l2_spectral, norm_mk
from cauchy.solver import apply_generalized_laplacian, grid_symbol, propagator, solve_cauchy
from exceptions import BoundaryMassError, DomainError
from kernels.space_kernel import zeta
from models.field import Field, Grid, gaussian
from models.kernel import CustomLaplaceKernel


@pytest.fixture
def grid():
    return Grid(half_width=40.0, points=1024)


def test_initial_time_returns_the_data(caputo_half, riesz, grid):
    """Test p(0) = f."""
    f = gaussian(grid)
    p0 = solve_cauchy(caputo_half, riesz, f, [0.0])[0]
    np.testing.assert_allclose(p0.values, f.values, atol=1e-12)


def test_mass_is_conserved(caputo_half, riesz, grid):
    """Test that zeta(0) = 0 keeps the total mass."""
    for p in solve_cauchy(caputo_half, riesz, gaussian(grid), [0.5, 2.0, 10.0]):
        assert p.mass() == pytest.approx(1.0, rel=1e-10)


def test_solution_spreads(caputo_half, riesz, grid):
    """Test that the peak decreases in time."""
    peaks = [np.max(p.values) for p in solve_cauchy(caputo_half, riesz, gaussian(grid), [0.0, 0.5, 2.0])]
    assert peaks[0] > peaks[1] > peaks[2]


def test_plancherel(grid):
    """Test that the L2 norm is the same on both sides of the transform."""
    f = gaussian(grid, 1.0, 0.7)
    assert norm_l2(f) == pytest.approx(norm_l2_spectral(f), rel=1e-12)
    assert norm_l2(f) == pytest.approx(1.0 / np.sqrt(2.0 * np.sqrt(np.pi) * 0.7), rel=1e-10)


def test_weighted_norm_dominates_l2(riesz, grid):
    """Test ||f||_mk >= ||f||_2 since 1 + zeta >= 1."""
    f = gaussian(grid)
    assert norm_mk(f, riesz) > norm_l2(f)


def test_propagator_is_the_relaxation_function(caputo_half, riesz, grid):
    """Test Z(t, zeta) on the grid, equal to 1 at xi = 0."""
    values = propagator(caputo_half, riesz, grid, 1.0)
    assert values[0] == 1.0
    assert np.all((values > 0) & (values <= 1.0))
    assert not grid_symbol(riesz, grid).flags.writeable


def test_generalized_laplacian_has_zero_mass(tempered_riesz):
    """Test that D_(k) u integrates to zero."""
    grid = Grid(half_width=20.0, points=256)
    lap = apply_generalized_laplacian(gaussian(grid), tempered_riesz)
    assert lap.mass() == pytest.approx(0.0, abs=1e-10)
    assert lap.values[grid.points // 2] < 0


def test_unsorted_times_are_rejected(caputo_half, riesz, grid):
    """Test the time validation."""
    with pytest.raises(DomainError):
        solve_cauchy(caputo_half, riesz, gaussian(grid), [1.0, 0.5])


def test_strict_mode_raises_on_boundary_mass(caputo_half, riesz):
    """Test that a too-narrow window fails in strict mode and only warns otherwise."""
    grid = Grid(half_width=5.0, points=256)
    f = gaussian(grid, 0.0, 0.5)
    with pytest.raises(BoundaryMassError):
        solve_cauchy(caputo_half, riesz, f, [10.0], strict=True)
    assert len(solve_cauchy(caputo_half, riesz, f, [10.0])) == 1


def test_equal_grids_share_the_cached_symbol(caputo_half, riesz):
    """Test that a fresh grid with the same L and N reuses the symbol and gives the same solution."""
    first = solve_cauchy(caputo_half, riesz, gaussian(Grid(half_width=20.0, points=256)), [1.0])[0]
    second = solve_cauchy(caputo_half, riesz, gaussian(Grid(half_width=20.0, points=256)), [1.0])[0]
    np.testing.assert_array_equal(first.values, second.values)
    assert grid_symbol(riesz, Grid(half_width=20.0, points=256)) is grid_symbol(riesz, first.grid)


def test_even_data_stays_even(caputo_half, riesz, grid):
    """Test p(t, -x) = p(t, x) for centered Gaussian data."""
    for p in solve_cauchy(caputo_half, riesz, gaussian(grid), [0.5, 2.0]):
        np.testing.assert_allclose(p.values[1:], p.values[:0:-1], atol=1e-12)


def test_refining_the_grid_leaves_the_solution_unchanged(caputo_half, riesz, grid):
    """Test that doubling N at fixed L reproduces the coarse solution at the shared points."""
    fine_grid = Grid(half_width=grid.half_width, points=2 * grid.points)
    coarse = solve_cauchy(caputo_half, riesz, gaussian(grid), [1.0])[0]
    fine = solve_cauchy(caputo_half, riesz, gaussian(fine_grid), [1.0])[0]
    np.testing.assert_array_equal(fine.grid.x[::2], coarse.grid.x)
    np.testing.assert_allclose(fine.values[::2], coarse.values, atol=1e-10)


def test_sine_modes_are_eigenfunctions(tempered_riesz):
    """Test D_(k) sin(xi x) = -zeta(xi) sin(xi x) for a grid frequency xi."""
    grid = Grid(half_width=20.0, points=256)
    xi = 10 * grid.dxi
    mode = Field.from_function(grid, lambda x: np.sin(xi * x))
    lap = apply_generalized_laplacian(mode, tempered_riesz)
    np.testing.assert_allclose(lap.values, -zeta(tempered_riesz, xi) * mode.values, atol=1e-10)


def test_tempered_series_and_inverted_routes_agree(tempered_caputo, tempered_riesz):
    """Test the tempered series against inversion of the same transform (s + 1)^{-1/2} in L2."""
    grid = Grid(half_width=20.0, points=512)
    inverted_kernel = CustomLaplaceKernel(laplace=lambda s: (s + 1.0) ** -0.5, label="tempered")
    series = solve_cauchy(tempered_caputo, tempered_riesz, gaussian(grid), [0.5, 1.0])
    inverted = solve_cauchy(inverted_kernel, tempered_riesz, gaussian(grid), [0.5, 1.0])
    for p, q in zip(series, inverted):
        assert norm_l2(Field(grid=grid, values=p.values - q.values)) <= 1e-6
