"""
The relaxation function Z(t, lambda), the solution of D_(g) Z = -lambda Z with
Z(0) = 1, whose Laplace transform is g^(s) / (s g^(s) + lambda).

Closed forms are used where they exist: the Mittag-Leffler function for the
Caputo kernel and a derivative series for the tempered kernel. Every other
kernel is inverted numerically on the Talbot contour.
"""
import logging
import math

import numpy as np
from scipy.special import gamma, gammainc

from exceptions import CrossCheckError, DomainError, SeriesTruncationError
from kernels.time_kernel import laplace_symbol
from models.kernel import CaputoKernel, MultiTermCaputoKernel, TemperedCaputoKernel, TimeKernel
from models.params import MAX_DERIVATIVE_ORDER, MultiMLParams
from models.relaxation import RelaxationCurve, RelaxationMethod
from specfun.laplace import laplace_invert, talbot
from specfun.mittag_leffler import ml, ml_derivative
from specfun.multivariate import ml_multivariate

logger = logging.getLogger(__name__)

TEMPERED_SERIES_LIMIT = 30.0
TEMPERED_FAST_PATH_LIMIT = 20.0
SERIES_RTOL = 1e-12
CROSS_CHECK_ATOL = 1e-5
ZERO_TIME = 1e-30


def relaxation_image(kernel: TimeKernel, lam, s):
    """Laplace transform g^(s) / (s g^(s) + lambda) of Z(., lambda)."""
    g = laplace_symbol(kernel, s)
    return g / (s * g + lam)


def _is_caputo(kernel: TimeKernel) -> bool:
    return isinstance(kernel, CaputoKernel) or (
        isinstance(kernel, TemperedCaputoKernel) and kernel.rate == 0.0)


def _inverted(kernel: TimeKernel, lam: np.ndarray, t: np.ndarray) -> np.ndarray:
    out = np.empty_like(lam)
    for time in np.unique(t):
        index = np.flatnonzero(t == time)
        rates = lam[index]
        out[index] = talbot(lambda s: relaxation_image(kernel, rates[None, :], s), float(time))
    return out


def relaxation_z_tempered_series(kernel: TemperedCaputoKernel, lam, t):
    """
    e^{-bt} sum_j (bt)^j / j! E^{(j)}_{alpha, 1+j-j alpha}(-lambda t^alpha).

    Raises:
        DomainError: if b t > 30, where the series is not trusted
        SeriesTruncationError: if 65 terms do not reach relative 1e-12
    """
    lam_b, t_b = np.broadcast_arrays(np.asarray(lam, dtype=float), np.asarray(t, dtype=float))
    bt = kernel.rate * t_b
    if np.any(bt > TEMPERED_SERIES_LIMIT):
        raise DomainError(f"tempered series needs b*t <= {TEMPERED_SERIES_LIMIT}, got {bt.max():g}")
    alpha = kernel.alpha
    z = -lam_b * t_b ** alpha
    partial = np.zeros(lam_b.shape)
    for j in range(MAX_DERIVATIVE_ORDER + 1):
        weight = bt ** j / math.factorial(j)
        term = weight * np.asarray(ml_derivative(alpha, 1.0 + j - j * alpha, j, z))
        partial = partial + term
        if j > np.max(bt) and np.all(np.abs(term) <= SERIES_RTOL * np.abs(partial)):
            result = np.exp(-bt) * partial
            return float(result) if result.ndim == 0 else result
    raise SeriesTruncationError("tempered relaxation series did not converge",
                                partial=float(np.max(np.exp(-bt) * partial)))


def _evaluate(kernel: TimeKernel, lam: np.ndarray, t: np.ndarray) -> tuple[np.ndarray, RelaxationMethod]:
    if _is_caputo(kernel):
        return np.asarray(ml(kernel.alpha, 1.0, -lam * t ** kernel.alpha)), RelaxationMethod.CLOSED_FORM
    if isinstance(kernel, TemperedCaputoKernel):
        fast = kernel.rate * t <= TEMPERED_FAST_PATH_LIMIT
        out = np.empty_like(lam)
        if np.any(fast):
            out[fast] = relaxation_z_tempered_series(kernel, lam[fast], t[fast])
        if np.any(~fast):
            out[~fast] = _inverted(kernel, lam[~fast], t[~fast])
        method = RelaxationMethod.SERIES if np.all(fast) else RelaxationMethod.INVERTED
        return out, method
    return _inverted(kernel, lam, t), RelaxationMethod.INVERTED


def relaxation_method(kernel: TimeKernel) -> RelaxationMethod:
    if _is_caputo(kernel):
        return RelaxationMethod.CLOSED_FORM
    if isinstance(kernel, TemperedCaputoKernel):
        return RelaxationMethod.SERIES
    return RelaxationMethod.INVERTED


def relaxation_z(kernel: TimeKernel, lam, t, cross_check: bool = False):
    """
    Relaxation function Z(t, lambda) in (0, 1].

    lam and t broadcast against each other. Z = 1 at t = 0 and at lambda = 0.

    Args:
        cross_check: also invert the Laplace transform and compare it with a
            closed-form or series route

    Raises:
        DomainError: for negative lambda or t
        CrossCheckError: if the two routes differ by more than 1e-5
    """
    lam_b, t_b = np.broadcast_arrays(np.asarray(lam, dtype=float), np.asarray(t, dtype=float))
    if np.any(~(lam_b >= 0)) or np.any(~(t_b >= 0)):
        raise DomainError("relaxation needs lambda >= 0 and t >= 0")
    out = np.ones(lam_b.shape)
    active = (lam_b > 0) & (t_b > 0)
    if np.any(active):
        rates, times = lam_b[active], t_b[active]
        values, method = _evaluate(kernel, rates, times)
        if cross_check and method is not RelaxationMethod.INVERTED:
            other = _inverted(kernel, rates, times)
            worst = int(np.argmax(np.abs(values - other)))
            if abs(values[worst] - other[worst]) > CROSS_CHECK_ATOL:
                raise CrossCheckError(
                    f"{method.value} and inverted relaxation differ at t={times[worst]:g}, "
                    f"lambda={rates[worst]:g}", first=float(values[worst]), second=float(other[worst]))
        out[active] = values
    return float(out) if out.ndim == 0 else out


def relaxation_z_multiterm_series(kernel: MultiTermCaputoKernel, lam: float, t: float) -> float:
    """
    Z for a multi-term kernel through the multivariate Mittag-Leffler function:

        1 - (lambda/a_1) t^{alpha_1} E_{(alpha_1-alpha_2, .., alpha_1-alpha_m, alpha_1), 1+alpha_1}(
            -(a_2/a_1) t^{alpha_1-alpha_2}, .., -(a_m/a_1) t^{alpha_1-alpha_m}, -(lambda/a_1) t^{alpha_1})

    Only valid in the series regime (sum of |arguments| <= 20).
    """
    if lam < 0 or t < 0:
        raise DomainError("relaxation needs lambda >= 0 and t >= 0")
    if lam == 0 or t == 0:
        return 1.0
    a_lead, order_lead = kernel.coefficients[0], kernel.orders[0]
    rest = list(zip(kernel.coefficients[1:], kernel.orders[1:]))
    exponents = tuple(order_lead - order for _, order in rest) + (order_lead,)
    arguments = tuple(-(a / a_lead) * t ** (order_lead - order) for a, order in rest)
    arguments += (-(lam / a_lead) * t ** order_lead,)
    value = ml_multivariate(MultiMLParams(exponents=exponents, b=1.0 + order_lead, arguments=arguments))
    return 1.0 - (lam / a_lead) * t ** order_lead * value


def g_l1_norm(kernel: TimeKernel, t):
    """Running integral of the kernel, ||g||_{L^1(0,t)}."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(~(t_arr > 0)):
        raise DomainError(f"time must be positive, got {t}")
    if isinstance(kernel, CaputoKernel):
        value = t_arr ** (1.0 - kernel.alpha) / gamma(2.0 - kernel.alpha)
    elif isinstance(kernel, MultiTermCaputoKernel):
        value = sum(a * t_arr ** (1.0 - order) / gamma(2.0 - order)
                    for a, order in zip(kernel.coefficients, kernel.orders))
    elif isinstance(kernel, TemperedCaputoKernel):
        if kernel.rate == 0.0:
            value = t_arr ** (1.0 - kernel.alpha) / gamma(2.0 - kernel.alpha)
        else:
            value = kernel.rate ** (kernel.alpha - 1.0) * gammainc(1.0 - kernel.alpha, kernel.rate * t_arr)
    else:
        value = laplace_invert(lambda s: laplace_symbol(kernel, s) / s, t_arr)
    return float(value) if np.ndim(value) == 0 else np.asarray(value)


def relaxation_upper_bound(kernel: TimeKernel, lam, t):
    """1 / (1 + t lambda / ||g||_{L^1(0,t)}), an upper bound of Z(t, lambda)."""
    return 1.0 / (1.0 + np.asarray(t, dtype=float) * np.asarray(lam, dtype=float) / g_l1_norm(kernel, t))


def completely_monotone_violation(times, values, max_order: int = 3) -> float:
    """
    Largest sign violation of (-1)^m f[t_i..t_{i+m}] (t_{i+m} - t_i)^m for m <= max_order.

    Divided differences of a completely monotone function alternate in sign;
    scaling by the span keeps them comparable with plain differences.
    Returns 0 when the pattern holds.
    """
    times = np.asarray(times, dtype=float)
    diffs = np.asarray(values, dtype=float)
    worst = 0.0
    for order in range(1, max_order + 1):
        if len(diffs) < 2:
            break
        span = times[order:] - times[:-order]
        diffs = (diffs[1:] - diffs[:-1]) / span
        scaled = (-1.0) ** order * diffs * span ** order
        worst = max(worst, float(np.max(-scaled)))
    return worst


def relaxation_curve(kernel: TimeKernel, lam: float, times) -> RelaxationCurve:
    """Sample Z(., lambda) at increasing times > 0 together with its diagnostics."""
    times = np.asarray(times, dtype=float)
    if np.any(np.diff(times) <= 0):
        raise DomainError("sample times must be strictly increasing")
    values = np.asarray(relaxation_z(kernel, lam, times))
    violation = completely_monotone_violation(times, values)
    if violation > 1e-9:
        logger.warning("relaxation curve for lambda=%g violates complete monotonicity by %.3e",
                       lam, violation)
    return RelaxationCurve(
        kernel=kernel,
        rate=lam,
        times=times,
        values=values,
        method=relaxation_method(kernel),
        value_at_zero=relaxation_z(kernel, lam, ZERO_TIME),
        monotonicity_violation=violation,
    )
