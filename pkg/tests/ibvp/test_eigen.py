"""
Tests for the eigendecomposition of the bounded-domain operator.
"""
import numpy as np
import pytest

from exceptions import DomainError, PositivityError
from ibvp.eigen import eigendecompose, eigenpair_residual, eigensystem, orthonormality_defect
from ibvp.truncation import truncate_kernel


@pytest.fixture
def eig(tempered_riesz):
    return eigensystem(truncate_kernel(tempered_riesz, 1.0), 128)


def test_eigenvalues_are_positive_and_sorted(eig):
    """Test 0 < lambda_1 <= ... <= lambda_M."""
    assert eig.eigenvalues[0] > 0
    assert np.all(np.diff(eig.eigenvalues) >= 0)


def test_eigenvectors_are_orthonormal(eig):
    """Test Psi^T W Psi = I for the dx-weighted inner product."""
    assert orthonormality_defect(eig) <= 1e-10


@pytest.mark.parametrize("j", [0, 64, 127])
def test_eigenpairs_solve_the_problem(eig, j):
    """Test the relative residual of A psi = lambda psi."""
    assert eigenpair_residual(eig, j) <= 1e-9


def test_system_is_read_only(eig):
    """Test that the decomposition cannot be modified in place."""
    with pytest.raises(ValueError):
        eig.vectors[0, 0] = 1.0


def test_leading_eigenvalue_converges(tempered_riesz):
    """Test that refining the grid moves lambda_1 by under five percent."""
    truncated = truncate_kernel(tempered_riesz, 1.0)
    coarse = eigensystem(truncated, 256).eigenvalues[0]
    fine = eigensystem(truncated, 512).eigenvalues[0]
    assert abs(fine - coarse) <= 5e-2 * fine


def test_negative_eigenvalue_is_rejected():
    """Test that an indefinite matrix raises."""
    with pytest.raises(PositivityError):
        eigendecompose(np.diag([-1.0, 1.0, 2.0]))


def test_non_square_matrix_is_rejected():
    """Test the shape check."""
    with pytest.raises(DomainError):
        eigendecompose(np.ones((3, 4)))
