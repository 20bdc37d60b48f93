"""
Tests for the kernel condition spot checks.
"""
import numpy as np

from kernels.conditions import check_conditions
from models.kernel import CustomLaplaceKernel, CustomSpaceKernel, MultiTermCaputoKernel, RieszKernel


def test_caputo_kernel_passes(caputo_half):
    """Test that a single Caputo kernel satisfies every spot check."""
    report = check_conditions(caputo_half)
    assert report.passed
    assert report.necessary_only
    assert not report.get("divergence_at_zero").skipped


def test_tempered_kernel_waives_divergence_at_zero(tempered_caputo):
    """Test that tempering skips the small-s divergence check."""
    report = check_conditions(tempered_caputo)
    assert report.passed
    assert report.get("divergence_at_zero").skipped


def test_multi_term_kernel_passes():
    """Test a two-term Caputo kernel."""
    assert check_conditions(MultiTermCaputoKernel(coefficients=(1.0, 0.5), orders=(0.7, 0.3))).passed


def test_bounded_time_kernel_fails_growth():
    """Test that s g^(s) -> 0 at infinity is reported."""
    report = check_conditions(CustomLaplaceKernel(laplace=lambda s: 1.0 / (1.0 + s) ** 2))
    assert not report.passed
    assert not report.get("growth_at_infinity").passed
    assert report.get("complete_monotonicity_order_2").passed


def test_space_kernels_pass(riesz, tempered_riesz):
    """Test that the built-in space kernels pass."""
    for kernel in (riesz, tempered_riesz):
        report = check_conditions(kernel)
        assert report.passed, report.summary()


def test_negative_space_kernel_fails():
    """Test that a negative kernel is reported, not raised."""
    report = check_conditions(CustomSpaceKernel(function=lambda x: -np.exp(-np.abs(x))))
    assert not report.passed
    assert not report.get("kernel_positive").passed
    assert report.get("kernel_even").passed


def test_summary_carries_the_disclaimer(caputo_half):
    """Test that the serialized report says the checks are necessary only."""
    summary = check_conditions(caputo_half).summary()
    assert summary["necessary_only"] is True
    assert "necessary conditions only" in summary["note"]
    assert summary["passed"] is True


def test_increasing_transform_fails_monotonicity():
    """Test that g^(s) = s, which increases, fails the complete-monotonicity check."""
    report = check_conditions(CustomLaplaceKernel(laplace=lambda s: s))
    assert not report.passed
    assert not report.get("complete_monotonicity_order_1").passed


def test_riesz_kernels_pass_the_integrability_check():
    """Test that power-law kernels of every order have a convergent symbol quadrature."""
    for beta in (0.25, 0.5, 0.75):
        report = check_conditions(RieszKernel(beta=beta))
        assert report.get("integrable_near_origin_and_tail").passed, report.summary()
