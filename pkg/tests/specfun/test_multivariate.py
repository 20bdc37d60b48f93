"""
Tests for the multivariate Mittag-Leffler function.
"""
import pytest
from pydantic import ValidationError

from exceptions import DomainError
from models.params import MultiMLParams
from specfun.mittag_leffler import ml
from specfun.multivariate import ml_multivariate


def test_single_argument_reduces_to_two_parameter_function():
    """Test E_{(a), b}(z) = E_{a,b}(z)."""
    params = MultiMLParams(exponents=(0.5,), b=1.0, arguments=(-1.0,))
    assert ml_multivariate(params) == pytest.approx(ml(0.5, 1.0, -1.0), rel=1e-12)


def test_zero_arguments_drop_out():
    """Test that a zero argument does not change the value."""
    with_zero = MultiMLParams(exponents=(0.3, 0.5), b=1.5, arguments=(0.0, -2.0))
    alone = MultiMLParams(exponents=(0.5,), b=1.5, arguments=(-2.0,))
    assert ml_multivariate(with_zero) == pytest.approx(ml_multivariate(alone), rel=1e-14)


def test_equal_exponents_merge_arguments():
    """Test that E_{(a,a),b}(x, y) = E_{a,b}(x + y) by the multinomial theorem."""
    params = MultiMLParams(exponents=(0.6, 0.6), b=1.2, arguments=(-0.7, -1.1))
    assert ml_multivariate(params) == pytest.approx(ml(0.6, 1.2, -1.8), rel=1e-10)


def test_all_zero_arguments_give_reciprocal_gamma():
    """Test the value at the origin."""
    params = MultiMLParams(exponents=(0.5, 0.2), b=1.0, arguments=(0.0, 0.0))
    assert ml_multivariate(params) == pytest.approx(1.0)


def test_outside_series_regime_raises():
    """Test that sum |z| > 20 is refused."""
    params = MultiMLParams(exponents=(0.5, 0.3), b=1.0, arguments=(-15.0, -6.0))
    with pytest.raises(DomainError, match="exceeds"):
        ml_multivariate(params)


def test_lengths_must_match():
    """Test that exponents and arguments are validated together."""
    with pytest.raises(ValidationError):
        MultiMLParams(exponents=(0.5, 0.3), b=1.0, arguments=(-1.0,))
