"""
Kernel truncation for the bounded-domain problem.

Inside Omega = [-2H, 2H] \\ {0} the kernel is kept; outside it is replaced by
the power law theta |x|^{-(1+2beta)}, which it has to dominate inside Omega.
"""
import logging
from typing import Callable

import numpy as np

from exceptions import DomainError, LowerBoundViolationError
from kernels.space_kernel import kernel_function, leading_order
from models.bounded import TruncatedKernel
from models.kernel import SpaceKernel

logger = logging.getLogger(__name__)

SAMPLE_POINTS = 400
LOWER_BOUND_RTOL = 1e-12


def _omega_samples(half_width: float) -> np.ndarray:
    return np.logspace(np.log10(2.0 * half_width) - 6.0, np.log10(2.0 * half_width), SAMPLE_POINTS)


def default_theta(base: SpaceKernel, half_width: float, beta: float) -> float:
    """Sampled infimum of k(x) |x|^{1+2beta} over Omega; the tightest admissible theta."""
    x = _omega_samples(half_width)
    return float(np.min(kernel_function(base)(x) * x ** (1.0 + 2.0 * beta)))


def truncate_kernel(
    base: SpaceKernel,
    half_width: float = 1.0,
    theta: float | None = None,
    beta: float | None = None,
) -> TruncatedKernel:
    """
    Build k* for the domain (-H, H).

    Args:
        theta, beta: parameters of the lower bound; beta defaults to the
            kernel's own order and theta to the sampled infimum

    Raises:
        LowerBoundViolationError: if k(x) < theta |x|^{-(1+2beta)} at a sampled x in Omega
    """
    if beta is None:
        beta = leading_order(base)
        if beta is None:
            raise DomainError("beta must be given for custom kernels")
    if theta is None:
        theta = default_theta(base, half_width, beta)

    x = _omega_samples(half_width)
    k = kernel_function(base)(x)
    bound = theta * x ** (-(1.0 + 2.0 * beta))
    shortfall = (bound - k) / bound
    worst = int(np.argmax(shortfall))
    if shortfall[worst] > LOWER_BOUND_RTOL:
        raise LowerBoundViolationError(
            f"kernel below theta |x|^-(1+2beta) with theta={theta:g}, beta={beta:g}", x=float(x[worst]))
    logger.debug("truncated kernel with H=%g theta=%g beta=%g", half_width, theta, beta)
    return TruncatedKernel(base=base, half_width=half_width, theta=theta, beta=beta)


def truncated_kernel_function(kernel: TruncatedKernel) -> Callable[[np.ndarray], np.ndarray]:
    """Vectorized k*(x)."""
    k = kernel_function(kernel.base)
    exponent = -(1.0 + 2.0 * kernel.beta)

    def evaluate(x):
        x = np.asarray(x, dtype=float)
        inside = np.abs(x) <= kernel.horizon
        tail = kernel.theta * np.abs(np.where(inside, 1.0, x)) ** exponent
        return np.where(inside, k(np.where(inside, x, kernel.horizon)), tail)

    return evaluate
