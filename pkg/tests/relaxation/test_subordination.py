"""
Tests for the subordination density.
"""
import math

import numpy as np
import pytest

from exceptions import DomainError
from relaxation.relaxation_function import relaxation_z
from relaxation.subordination import subordination_density, subordination_profile


def test_half_order_density_is_half_gaussian(caputo_half):
    """Test phi(t, tau) = exp(-tau^2/4t)/sqrt(pi t) for alpha = 1/2."""
    tau = np.array([0.1, 0.5, 1.0, 2.0, 3.0])
    for t in (0.5, 1.0, 2.0, 4.0):
        expected = np.exp(-tau ** 2 / (4.0 * t)) / math.sqrt(math.pi * t)
        np.testing.assert_allclose(subordination_density(caputo_half, t, tau), expected, atol=1e-5)


@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_profile_is_normalized(caputo_half, tempered_caputo, t):
    """Test that phi(t, .) integrates to one."""
    for kernel in (caputo_half, tempered_caputo):
        profile = subordination_profile(kernel, t)
        assert profile.mass == pytest.approx(1.0, abs=1e-3)
        assert np.all(profile.density >= 0)


def test_profile_reproduces_relaxation(caputo_half):
    """Test Z(t, lambda) as the Laplace transform in tau of phi."""
    profile = subordination_profile(caputo_half, 1.0)
    value = np.trapezoid(profile.density * np.exp(-profile.tau), profile.tau)
    assert value == pytest.approx(relaxation_z(caputo_half, 1.0, 1.0), abs=1e-4)


def test_density_rejects_zero_time(caputo_half):
    """Test that t = 0 is outside the domain."""
    with pytest.raises(DomainError):
        subordination_density(caputo_half, 0.0, 1.0)
