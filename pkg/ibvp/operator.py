"""
Discretization of -D_(k) on B = (-H, H) with u = 0 outside B.

Jumps are integrated up to the horizon 2H (every longer jump leaves B). On the
M interior points x_i = -H + i dx, dx = 2H/(M+1):

* shifts |y| >= dx are lumped into cells around m dx with weights
  W_m = integral of k over the cell (the first cell starts at dx, the last
  one ends at 2H), giving A_{i,i+-m} = -2 W_m and 4 sum_m W_m on the diagonal;
* shifts |y| < dx use u(x+y) + u(x-y) - 2u(x) ~ y^2 u''(x) with the centred
  second difference, weighted by N = 2 integral_0^dx y^2 k(y) dy.

The matrix depends on |i - j| only, so it is a symmetric Toeplitz matrix.
"""
import logging

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad
from scipy.linalg import toeplitz

from exceptions import AssemblyError, DomainError, QuadratureError
from ibvp.truncation import truncated_kernel_function
from kernels.space_kernel import kernel_function
from models.bounded import TruncatedKernel
from models.kernel import SpaceKernel

logger = logging.getLogger(__name__)

MIN_POINTS = 64
GAUSS_NODES = 16
SYMMETRY_TOLERANCE = 1e-6


def interior_points(points: int, half_width: float = 1.0) -> tuple[np.ndarray, float]:
    dx = 2.0 * half_width / (points + 1)
    return -half_width + dx * np.arange(1, points + 1), dx


def _cell_weights(k, dx: float, horizon: float) -> np.ndarray:
    """W_m for m = 1..m_max by Gauss-Legendre on each cell."""
    m_max = int(np.ceil(horizon / dx - 0.5))
    m = np.arange(1, m_max + 1)
    lower = np.maximum((m - 0.5) * dx, dx)
    upper = np.minimum((m + 0.5) * dx, horizon)
    nodes, weights = leggauss(GAUSS_NODES)
    half = 0.5 * (upper - lower)[:, None]
    y = 0.5 * (upper + lower)[:, None] + half * nodes[None, :]
    return np.sum(half * weights[None, :] * k(y), axis=1)


def _near_weight(k, dx: float) -> float:
    value, abserr = quad(lambda y: y * y * k(y), 0.0, dx, epsabs=1e-15, epsrel=1e-12, limit=200)
    if not np.isfinite(value):
        raise QuadratureError("near-field second moment", partial=value, abserr=abserr)
    return 2.0 * value


def assemble_operator(
    kernel: TruncatedKernel | SpaceKernel,
    points: int,
    half_width: float | None = None,
) -> np.ndarray:
    """
    Symmetric M x M matrix approximating -D_(k) with homogeneous exterior data.

    A plain SpaceKernel needs half_width; a TruncatedKernel carries its own.

    Raises:
        DomainError: for fewer than 64 points
        AssemblyError: if the symmetry defect before symmetrization exceeds 1e-6
    """
    if points < MIN_POINTS:
        raise DomainError(f"need at least {MIN_POINTS} grid points, got {points}")
    if isinstance(kernel, TruncatedKernel):
        half_width = kernel.half_width
        k = truncated_kernel_function(kernel)
    else:
        if half_width is None:
            raise DomainError("half_width is required for an untruncated kernel")
        k = kernel_function(kernel)

    _, dx = interior_points(points, half_width)
    weights = _cell_weights(k, dx, 2.0 * half_width)
    near = _near_weight(k, dx) / (dx * dx)

    column = np.zeros(points)
    column[0] = 4.0 * np.sum(weights) + 2.0 * near
    shifts = min(points - 1, len(weights))
    column[1:shifts + 1] = -2.0 * weights[:shifts]
    column[1] -= near
    matrix = toeplitz(column)

    scale = float(np.max(np.abs(matrix)))
    defect = float(np.max(np.abs(matrix - matrix.T))) / scale
    if defect > SYMMETRY_TOLERANCE:
        raise AssemblyError(f"operator symmetry defect {defect:.3e}")
    logger.debug("assembled %dx%d operator, dx=%g, symmetry defect %.1e", points, points, dx, defect)
    return 0.5 * (matrix + matrix.T)
