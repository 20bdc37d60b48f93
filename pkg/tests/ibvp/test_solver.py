"""
Tests for the eigenfunction-expansion solver.
"""
import numpy as np
import pytest
from scipy.special import erfcx

from exceptions import DomainError
from ibvp.eigen import eigensystem
from ibvp.solver import domain_norm, mode_count, solve_ibvp
from ibvp.truncation import truncate_kernel
from relaxation.relaxation_function import relaxation_z


@pytest.fixture
def eig(tempered_riesz):
    return eigensystem(truncate_kernel(tempered_riesz, 1.0), 256)


def test_initial_data_is_reconstructed(caputo_half, eig):
    """Test p(0) = f for a smooth bump."""
    f = np.exp(-eig.x ** 2 / (2.0 * 0.2 ** 2))
    p0 = solve_ibvp(caputo_half, eig, f, [0.0])[0]
    assert np.sqrt(np.sum((p0.values - f) ** 2) * eig.dx) <= 1e-8


def test_single_mode_relaxes_in_place(tempered_caputo, eig):
    """Test that f = psi_1 evolves as Z(t, lambda_1) psi_1."""
    f = np.array(eig.vectors[:, 0])
    for p in solve_ibvp(tempered_caputo, eig, f, [0.1, 1.0, 10.0]):
        z = relaxation_z(tempered_caputo, eig.eigenvalues[0], p.t)
        np.testing.assert_allclose(p.values, z * f, atol=1e-12)
        assert p.modes[0] == pytest.approx(z, rel=1e-12)


def test_leading_mode_follows_erfcx(caputo_half, eig):
    """Test omega_1(t)/omega_1(0) = E_{1/2}(-lambda_1 sqrt(t)) = erfcx(lambda_1 sqrt(t))."""
    f = np.exp(-eig.x ** 2 / (2.0 * 0.2 ** 2))
    solution = solve_ibvp(caputo_half, eig, f, [0.0, 0.5, 2.0])
    for p in solution[1:]:
        ratio = p.modes[0] / solution[0].modes[0]
        assert ratio == pytest.approx(erfcx(eig.eigenvalues[0] * np.sqrt(p.t)), rel=1e-7)


def test_zero_data_stays_zero(caputo_half, eig):
    """Test the trivial solution."""
    assert mode_count(eig.eigenvalues, np.zeros(eig.size)) == 0
    p = solve_ibvp(caputo_half, eig, np.zeros(eig.size), [1.0])[0]
    assert np.all(p.values == 0.0)
    assert domain_norm(eig.eigenvalues, p.modes) == 0.0


def test_mode_amplitudes_never_grow(caputo_half, eig):
    """Test |omega_j(t)| nonincreasing in t."""
    f = np.random.default_rng(5).standard_normal(eig.size)
    solution = solve_ibvp(caputo_half, eig, f, [0.0, 0.01, 0.1, 1.0])
    for a, b in zip(solution, solution[1:]):
        assert np.all(np.abs(b.modes) <= np.abs(a.modes) + 1e-15)


def test_shape_mismatch_is_rejected(caputo_half, eig):
    """Test that f must live on the interior grid."""
    with pytest.raises(DomainError, match="shape"):
        solve_ibvp(caputo_half, eig, np.ones(eig.size + 1), [1.0])


def test_negative_time_is_rejected(caputo_half, eig):
    """Test the time domain."""
    with pytest.raises(DomainError):
        solve_ibvp(caputo_half, eig, np.ones(eig.size), [-1.0])
