"""
Mean squared displacement of the nonlocal diffusion, with Laplace transform
zeta''(0) / (s^2 g^(s)). Power-law jump kernels have no finite MSD.
"""
import numpy as np
from scipy.special import gamma

from exceptions import DomainError
from kernels.space_kernel import zeta_second_derivative_at_zero
from kernels.time_kernel import laplace_symbol
from models.kernel import CaputoKernel, Divergent, SpaceKernel, TemperedCaputoKernel, TimeKernel
from specfun.laplace import laplace_invert


def msd_time_factor(time_kernel: TimeKernel, t):
    """M(t), the inverse Laplace transform of 1 / (s^2 g^(s)); the MSD is zeta''(0) M(t)."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(~(t_arr > 0)):
        raise DomainError(f"time must be positive, got {t}")
    if isinstance(time_kernel, CaputoKernel) or (
            isinstance(time_kernel, TemperedCaputoKernel) and time_kernel.rate == 0.0):
        value = t_arr ** time_kernel.alpha / gamma(1.0 + time_kernel.alpha)
    else:
        value = laplace_invert(lambda s: 1.0 / (s * s * laplace_symbol(time_kernel, s)), t_arr)
    return float(value) if np.ndim(value) == 0 else np.asarray(value)


def msd(time_kernel: TimeKernel, space_kernel: SpaceKernel, t):
    """
    Mean squared displacement <x^2(t)> for one or more t > 0.

    Returns Divergent when the jump kernel has no finite second moment.
    """
    curvature = zeta_second_derivative_at_zero(space_kernel)
    if isinstance(curvature, Divergent):
        return curvature
    return curvature * msd_time_factor(time_kernel, t)


def msd_loglog_slope(times, values) -> float:
    """Least-squares slope of log(msd) against log(t)."""
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    keep = (times > 0) & (values > 0)
    slope, _ = np.polyfit(np.log(times[keep]), np.log(values[keep]), 1)
    return float(slope)
