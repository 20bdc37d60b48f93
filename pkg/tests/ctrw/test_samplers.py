"""
Tests for the waiting-time and jump samplers.
"""
import numpy as np
import pytest

from ctrw.samplers import (
    build_jump_sampler,
    build_waiting_sampler,
    draw_jumps,
    draw_waiting_times,
    survival,
    symmetric_stable,
)
from exceptions import DomainError
from kernels.space_kernel import zeta
from models.ensemble import SamplerMethod
from relaxation.relaxation_function import relaxation_image
from specfun.laplace import laplace_invert

SAMPLES = 200_000


def within(sample_mean: float, expected: float, sample_std: float, sigmas: float = 4.0) -> bool:
    return abs(sample_mean - expected) <= sigmas * sample_std / np.sqrt(SAMPLES)


def test_caputo_waiting_times_follow_the_survival(caputo_half):
    """Test P(T > t) = E_{1/2}(-sqrt(t)) for the closed-form sampler."""
    table = build_waiting_sampler(caputo_half)
    assert table.method is SamplerMethod.CLOSED_FORM
    waits = draw_waiting_times(table, np.random.default_rng(1), SAMPLES)
    assert np.all(waits > 0)
    for t in (0.1, 1.0, 10.0):
        expected = survival(caputo_half, t)
        indicator = waits > t
        assert within(indicator.mean(), expected, np.sqrt(expected * (1.0 - expected)))


def test_waiting_times_scale_with_epsilon(caputo_half):
    """Test that eps rescales the Caputo waiting times by eps^{1/alpha}."""
    base = draw_waiting_times(build_waiting_sampler(caputo_half), np.random.default_rng(3), 100)
    scaled = draw_waiting_times(build_waiting_sampler(caputo_half, 0.01), np.random.default_rng(3), 100)
    np.testing.assert_allclose(scaled, 1e-4 * base, rtol=1e-12)


def test_tempered_waiting_table_matches_real_axis_inversion(tempered_caputo):
    """Test the tabulated survival against Gaver-Stehfest inversion."""
    table = build_waiting_sampler(tempered_caputo)
    assert table.method is SamplerMethod.TRANSFORM_INVERTED
    assert table.tail_exponent > 0
    size = len(table.abscissae)
    for index in (5, size // 3, 2 * size // 3, size - 1):
        t = table.abscissae[index]
        expected = laplace_invert(lambda s: relaxation_image(tempered_caputo, 1.0, s), t,
                                  method="gaver_stehfest")
        assert 1.0 - table.cdf[index] == pytest.approx(expected, abs=1e-4)


def test_tempered_waiting_times_follow_the_survival(tempered_caputo):
    """Test the sampled survival of the tabulated law."""
    table = build_waiting_sampler(tempered_caputo)
    waits = draw_waiting_times(table, np.random.default_rng(2), SAMPLES)
    assert np.all(waits > 0)
    for t in (0.1, 1.0, 5.0):
        expected = survival(tempered_caputo, t)
        assert within((waits > t).mean(), expected, np.sqrt(expected * (1.0 - expected)))


def test_symmetric_stable_characteristic_function():
    """Test E cos(xi X) = exp(-|xi|^a) for the Chambers-Mallows-Stuck draws."""
    x = symmetric_stable(np.random.default_rng(4), 1.5, SAMPLES)
    for xi in (0.5, 1.0, 2.0):
        c = np.cos(xi * x)
        assert within(c.mean(), np.exp(-xi ** 1.5), c.std())


def test_riesz_jumps_have_the_symbol(riesz):
    """Test E cos(xi J) = exp(-eps zeta(xi)) for Riesz jumps."""
    table = build_jump_sampler(riesz, 0.5)
    jumps = draw_jumps(table, np.random.default_rng(6), SAMPLES)
    for xi in (0.5, 1.0, 2.0):
        c = np.cos(xi * jumps)
        assert within(c.mean(), np.exp(-0.5 * zeta(riesz, xi)), c.std())


def test_tempered_jumps_have_variance_four(tempered_riesz):
    """Test E J^2 = zeta''(0) = 4 for the tabulated tempered law."""
    table = build_jump_sampler(tempered_riesz)
    assert table.method is SamplerMethod.TRANSFORM_INVERTED
    assert table.clip_mass < 1e-4
    jumps = draw_jumps(table, np.random.default_rng(7), SAMPLES)
    assert abs(jumps.mean()) < 0.05
    assert np.mean(jumps ** 2) == pytest.approx(4.0, rel=0.05)
    c = np.cos(jumps)
    assert within(c.mean(), np.exp(-zeta(tempered_riesz, 1.0)), c.std())


def test_nonpositive_scale_is_rejected(caputo_half, riesz):
    """Test the scale validation."""
    with pytest.raises(DomainError):
        build_waiting_sampler(caputo_half, 0.0)
    with pytest.raises(DomainError):
        build_jump_sampler(riesz, -1.0)
