"""
Tests for grids and fields.
"""
import numpy as np
import pytest
from pydantic import ValidationError

from models.field import Field, Grid, box, gaussian


def test_grid_geometry():
    """Test dx = 2L/N, x_0 = -L and the frequency spacing pi/L."""
    grid = Grid(half_width=32.0, points=256)
    assert grid.dx == pytest.approx(0.25)
    assert grid.x[0] == -32.0
    assert grid.dxi == pytest.approx(np.pi / 32.0)
    assert grid.xi[0] == 0.0


def test_grid_needs_a_power_of_two():
    """Test the FFT size validation."""
    with pytest.raises(ValidationError, match="power of two"):
        Grid(half_width=1.0, points=384)


def test_forward_and_inverse_transform_a_gaussian():
    """Test the continuous Fourier transform exp(-xi^2/2)/sqrt(2 pi) of the unit Gaussian."""
    grid = Grid(half_width=20.0, points=512)
    field = gaussian(grid)
    np.testing.assert_allclose(field.spectrum.real, np.exp(-grid.xi ** 2 / 2.0) / np.sqrt(2.0 * np.pi), atol=1e-12)
    np.testing.assert_allclose(grid.inverse(field.spectrum).real, field.values, atol=1e-12)


def test_box_has_unit_mass():
    """Test the normalized indicator."""
    grid = Grid(half_width=4.0, points=256)
    assert box(grid, -1.0, 1.0).mass() == pytest.approx(1.0, rel=2e-2)


def test_field_values_are_read_only():
    """Test that fields are immutable."""
    field = gaussian(Grid(half_width=4.0, points=256))
    with pytest.raises(ValueError):
        field.values[0] = 1.0


def test_field_shape_must_match_the_grid():
    """Test the shape validation."""
    with pytest.raises(ValidationError, match="expected 256 values"):
        Field(grid=Grid(half_width=4.0, points=256), values=np.zeros(10))


def test_grid_rejects_coarse_sizes():
    """Test that fewer than 256 points is a validation error."""
    with pytest.raises(ValidationError, match="greater than or equal to 256"):
        Grid(half_width=5.0, points=16)


def test_equal_grids_compare_equal_after_use():
    """Test that grids with the same L and N stay equal and hashable once their arrays are built."""
    first = Grid(half_width=20.0, points=256)
    second = Grid(half_width=20.0, points=256)
    assert first.xi is second.xi
    assert first == second
    assert hash(first) == hash(second)
    assert first != Grid(half_width=20.0, points=512)
