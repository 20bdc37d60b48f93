"""
Bounded-domain problem solved by eigenfunction expansion:

    p(t) = sum_j <psi_j, f> Z(t, lambda_j) psi_j.
"""
import logging
from typing import List, Sequence

import numpy as np

from exceptions import DomainError
from models.bounded import DomainField, EigenSystem
from models.kernel import TimeKernel
from relaxation.relaxation_function import relaxation_z

logger = logging.getLogger(__name__)

TAIL_RTOL = 1e-10
TOP_DECILE_ENERGY = 1e-2


def domain_norm(eigenvalues: np.ndarray, modes: np.ndarray) -> float:
    """(sum |lambda_j omega_j|^2)^{1/2}, the graph norm of the operator in mode space."""
    return float(np.sqrt(np.sum((eigenvalues[:len(modes)] * modes) ** 2)))


def mode_count(eigenvalues: np.ndarray, coefficients: np.ndarray) -> int:
    """Smallest J whose discarded tail has graph norm below 1e-10 of the total."""
    energy = (eigenvalues * coefficients) ** 2
    total = float(np.sum(energy))
    if total == 0.0:
        return 0
    # tail[J] = sum_{j >= J} energy_j
    tail = np.concatenate([np.cumsum(energy[::-1])[::-1], [0.0]])
    return int(np.argmax(tail < (TAIL_RTOL ** 2) * total))


def solve_ibvp(
    time_kernel: TimeKernel,
    eig: EigenSystem,
    f: np.ndarray,
    times: Sequence[float],
) -> List[DomainField]:
    """
    Evolve the initial values f (on the interior grid of eig) to each time.

    Raises:
        DomainError: if f does not match the grid or the times are negative
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (eig.size,):
        raise DomainError(f"initial values must have shape ({eig.size},), got {f.shape}")
    times = [float(t) for t in times]
    if any(t < 0 for t in times):
        raise DomainError("times must be nonnegative")

    coefficients = eig.coefficients(f)
    decile = max(1, eig.size // 10)
    energy = float(np.sum(coefficients ** 2))
    if energy > 0 and np.sum(coefficients[-decile:] ** 2) > TOP_DECILE_ENERGY * energy:
        logger.warning("top decile of modes carries %.2f%% of the initial energy; refine the grid",
                       100.0 * np.sum(coefficients[-decile:] ** 2) / energy)

    used = mode_count(eig.eigenvalues, coefficients)
    rates = np.maximum(eig.eigenvalues[:used], 0.0)
    logger.debug("evolving %d of %d modes", used, eig.size)

    solution = []
    for t in times:
        modes = np.zeros(eig.size)
        if used:
            modes[:used] = coefficients[:used] * np.asarray(relaxation_z(time_kernel, rates, t))
        values = eig.vectors[:, :used] @ modes[:used]
        solution.append(DomainField(x=eig.x, dx=eig.dx, t=t, values=values, modes=modes))
    return solution
