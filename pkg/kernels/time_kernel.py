"""
Evaluation of time kernels: Laplace transform g^(s) and time-domain g(t).
"""
import numpy as np
from scipy.special import gamma

from exceptions import DomainError
from models.kernel import (
    CaputoKernel,
    CustomLaplaceKernel,
    MultiTermCaputoKernel,
    TemperedCaputoKernel,
    TimeKernel,
)


def laplace_symbol(kernel: TimeKernel, s):
    """
    Laplace transform of g on arrays of (possibly complex) s.

    No domain check: the inversion contours evaluate this off the real axis.
    Principal branches are used for the fractional powers.
    """
    s = np.asarray(s)
    if isinstance(kernel, CaputoKernel):
        return s ** (kernel.alpha - 1.0)
    if isinstance(kernel, MultiTermCaputoKernel):
        return sum(
            weight * s ** (order - 1.0)
            for weight, order in zip(kernel.coefficients, kernel.orders)
        )
    if isinstance(kernel, TemperedCaputoKernel):
        return (s + kernel.rate) ** (kernel.alpha - 1.0)
    if isinstance(kernel, CustomLaplaceKernel):
        return np.asarray(kernel.laplace(s))
    raise TypeError(f"unsupported time kernel {type(kernel).__name__}")


def g_laplace(kernel: TimeKernel, s):
    """
    Laplace transform g^(s) for real s > 0.

    Raises:
        DomainError: if any s is not strictly positive
    """
    s_arr = np.asarray(s, dtype=float)
    if np.any(~(s_arr > 0)):
        raise DomainError(f"Laplace variable must be positive, got {s}")
    value = np.real(laplace_symbol(kernel, s_arr))
    return float(value) if np.ndim(value) == 0 else value


def g_time(kernel: TimeKernel, t):
    """
    Kernel g(t) in the time domain for the built-in variants.

    Raises:
        DomainError: for nonpositive t
        TypeError: for kernels known only through their Laplace transform
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(~(t_arr > 0)):
        raise DomainError(f"time must be positive, got {t}")
    if isinstance(kernel, CaputoKernel):
        value = t_arr ** (-kernel.alpha) / gamma(1.0 - kernel.alpha)
    elif isinstance(kernel, MultiTermCaputoKernel):
        value = sum(
            weight * t_arr ** (-order) / gamma(1.0 - order)
            for weight, order in zip(kernel.coefficients, kernel.orders)
        )
    elif isinstance(kernel, TemperedCaputoKernel):
        value = np.exp(-kernel.rate * t_arr) * t_arr ** (-kernel.alpha) / gamma(1.0 - kernel.alpha)
    else:
        raise TypeError(f"{type(kernel).__name__} has no closed time-domain form")
    return float(value) if np.ndim(value) == 0 else value


def effective_order(kernel: TimeKernel) -> float | None:
    """Leading (largest) order of a built-in kernel, None for custom kernels."""
    if isinstance(kernel, (CaputoKernel, TemperedCaputoKernel)):
        return kernel.alpha
    if isinstance(kernel, MultiTermCaputoKernel):
        return kernel.orders[0]
    return None
