"""
Tests for numerical Laplace inversion.
"""
import math

import numpy as np
import pytest

from exceptions import CrossCheckError, DomainError
from specfun.laplace import (
    InversionMethod,
    gaver_stehfest,
    laplace_invert,
    stehfest_coefficients,
    talbot,
    talbot_nodes,
)


def test_talbot_inverts_exponential():
    """Test that 1/(s+1) inverts to e^{-t} down to the fixed-contour noise floor."""
    for t in (0.1, 1.0, 10.0):
        assert talbot(lambda s: 1.0 / (s + 1.0), t) == pytest.approx(math.exp(-t), rel=1e-8, abs=1e-10)


def test_talbot_handles_branch_cut_transforms():
    """Test that s^{-1/2} inverts to 1/sqrt(pi t)."""
    expected = 1.0 / math.sqrt(2.0 * math.pi)
    assert laplace_invert(lambda s: s ** -0.5, 2.0) == pytest.approx(expected, rel=1e-8, abs=1e-10)


def test_talbot_broadcasts_over_parameters():
    """Test that a transform with a trailing parameter axis gives one inversion per parameter."""
    rates = np.array([0.5, 1.0, 2.0])
    values = talbot(lambda s: 1.0 / (s + rates[None, :]), 1.0)
    assert values.shape == (3,)
    np.testing.assert_allclose(values, np.exp(-rates), rtol=1e-8, atol=1e-10)


def test_talbot_nodes_start_on_the_real_axis():
    """Test that the first contour node is the real point 2M/(5t)."""
    nodes = talbot_nodes(2.0)
    assert len(nodes) == 32
    assert nodes[0] == pytest.approx(0.4 * 32 / 2.0)
    assert nodes[0].imag == 0.0


def test_stehfest_coefficients_sum_to_zero():
    """Test that the Gaver-Stehfest weights annihilate constants."""
    weights = stehfest_coefficients()
    assert np.sum(weights) == pytest.approx(0.0, abs=1e-8 * np.max(np.abs(weights)))


def test_stehfest_rejects_odd_term_count():
    """Test that an odd number of terms is refused."""
    with pytest.raises(DomainError, match="even"):
        stehfest_coefficients.__wrapped__(13)


def test_gaver_stehfest_inverts_exponential():
    """Test that the real-axis method reaches about four digits."""
    assert gaver_stehfest(lambda s: 1.0 / (s + 1.0), 1.0) == pytest.approx(math.exp(-1.0), rel=1e-4)


def test_laplace_invert_vectorizes_over_times():
    """Test that an array of times gives an array of values."""
    t = np.array([0.5, 1.0, 2.0])
    np.testing.assert_allclose(laplace_invert(lambda s: 1.0 / (s + 1.0), t), np.exp(-t), rtol=1e-8, atol=1e-10)


def test_laplace_invert_rejects_nonpositive_times():
    """Test that t <= 0 raises DomainError."""
    with pytest.raises(DomainError):
        laplace_invert(lambda s: 1.0 / s, 0.0)
    with pytest.raises(DomainError):
        laplace_invert(lambda s: 1.0 / s, [1.0, -1.0])


def test_both_methods_agree_on_smooth_transforms():
    """Test that the cross-checked inversion returns the Talbot value."""
    value = laplace_invert(lambda s: 1.0 / (s + 1.0), 1.0, method=InversionMethod.BOTH)
    assert value == pytest.approx(math.exp(-1.0), rel=1e-8, abs=1e-10)


def test_both_methods_report_disagreement():
    """Test that an oscillating original, which Gaver-Stehfest cannot follow, raises CrossCheckError."""
    with pytest.raises(CrossCheckError):
        laplace_invert(lambda s: 1.0 / (s * s + 1.0), 10.0, method="both")
