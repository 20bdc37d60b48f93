"""
Tests for the mean squared displacement.
"""
import math

import numpy as np
import pytest

from models.kernel import CustomLaplaceKernel, Divergent
from relaxation.msd import msd, msd_loglog_slope, msd_time_factor


def test_tempered_jumps_give_subdiffusive_msd(caputo_half, tempered_riesz):
    """Test <x^2(t)> = zeta''(0) t^alpha / Gamma(1+alpha)."""
    assert msd(caputo_half, tempered_riesz, 1.0) == pytest.approx(4.0 / math.gamma(1.5), rel=1e-8)


def test_power_law_jumps_diverge(caputo_half, riesz):
    """Test that a Riesz kernel gives a typed divergence."""
    outcome = msd(caputo_half, riesz, 1.0)
    assert isinstance(outcome, Divergent)
    assert "power-law" in outcome.reason


def test_inverted_time_factor_matches_closed_form():
    """Test the numerical route on a transform-only Caputo kernel."""
    custom = CustomLaplaceKernel(laplace=lambda s: s ** -0.5)
    assert msd_time_factor(custom, 2.0) == pytest.approx(math.sqrt(2.0) / math.gamma(1.5), rel=1e-8)


def test_loglog_slope_recovers_the_exponent(caputo_half, tempered_riesz):
    """Test that the MSD grows like t^alpha."""
    t = np.array([0.5, 1.0, 2.0, 4.0])
    assert msd_loglog_slope(t, msd(caputo_half, tempered_riesz, t)) == pytest.approx(0.5, abs=1e-10)


def test_tempered_time_kernel_becomes_diffusive(tempered_caputo):
    """Test that tempering turns subdiffusion into normal diffusion at long times."""
    t = np.array([50.0, 100.0, 200.0])
    assert msd_loglog_slope(t, msd_time_factor(tempered_caputo, t)) == pytest.approx(1.0, abs=0.05)
