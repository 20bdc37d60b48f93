"""
Eigensystem of the discrete bounded-domain operator.
"""
import logging

import numpy as np
from scipy.linalg import eigh

from exceptions import DomainError, PositivityError
from ibvp.operator import assemble_operator, interior_points
from models.bounded import EigenSystem, TruncatedKernel

logger = logging.getLogger(__name__)

POSITIVITY_RTOL = 1e-8


def eigendecompose(matrix: np.ndarray, half_width: float = 1.0) -> EigenSystem:
    """
    Dense symmetric eigendecomposition with eigenvectors orthonormal for the dx-weighted inner product.

    Raises:
        DomainError: if the matrix is not square
        PositivityError: if an eigenvalue lies below -1e-8 lambda_max
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {matrix.shape}")
    points = matrix.shape[0]
    x, dx = interior_points(points, half_width)

    scale = float(np.max(np.abs(matrix)))
    defect = float(np.max(np.abs(matrix - matrix.T))) / scale if scale > 0 else 0.0
    symmetric = 0.5 * (matrix + matrix.T)

    eigenvalues, vectors = eigh(symmetric)
    top = float(eigenvalues[-1])
    if eigenvalues[0] < -POSITIVITY_RTOL * abs(top):
        raise PositivityError(f"eigenvalue {eigenvalues[0]:.6e} below zero (lambda_max={top:.6e})")
    logger.info("eigensystem of size %d: lambda_1=%.6g lambda_max=%.6g", points, eigenvalues[0], top)

    for array in (x, symmetric, eigenvalues):
        array.flags.writeable = False
    psi = vectors / np.sqrt(dx)
    psi.flags.writeable = False
    return EigenSystem(
        half_width=half_width,
        x=x,
        dx=dx,
        matrix=symmetric,
        eigenvalues=eigenvalues,
        vectors=psi,
        symmetry_defect=defect,
    )


def eigensystem(kernel: TruncatedKernel, points: int) -> EigenSystem:
    """Assemble the operator for a truncated kernel and decompose it."""
    return eigendecompose(assemble_operator(kernel, points), kernel.half_width)


def orthonormality_defect(eig: EigenSystem) -> float:
    """max |Psi^T W Psi - I| with W = dx I."""
    gram = eig.vectors.T @ eig.vectors * eig.dx
    return float(np.max(np.abs(gram - np.eye(eig.size))))


def eigenpair_residual(eig: EigenSystem, j: int) -> float:
    """||A psi_j - lambda_j psi_j||_inf / ||A||_inf for the 0-based mode j."""
    psi = eig.vectors[:, j]
    residual = eig.matrix @ psi - eig.eigenvalues[j] * psi
    return float(np.max(np.abs(residual)) / (np.max(np.abs(eig.matrix)) * np.max(np.abs(psi))))
