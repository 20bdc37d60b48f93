"""
Subordination density phi(t, tau), the inverse Laplace transform in s of
g^(s) exp(-tau s g^(s)). It is a probability density in tau for each t and

    Z(t, lambda) = integral_0^inf phi(t, tau) e^{-lambda tau} dtau.
"""
import logging

import numpy as np
from scipy.integrate import simpson

from exceptions import DomainError, NormalizationError
from kernels.time_kernel import laplace_symbol
from models.kernel import TimeKernel
from models.relaxation import SubordinationProfile
from specfun.laplace import TALBOT_NODES, gaver_stehfest, talbot, talbot_nodes

logger = logging.getLogger(__name__)

PROFILE_POINTS = 2001
TAIL_FRACTION = 1e-12
MASS_TOLERANCE = 1e-2
CLIP_TOLERANCE = 1e-4
MAX_DOUBLINGS = 12
ABSOLUTE_FLOOR = 1e-13
# Talbot terms may not exceed the leading node by more than e^5
CONTOUR_GROWTH_MARGIN = 5.0


def _image(kernel: TimeKernel, tau: np.ndarray):
    def transform(s):
        g = laplace_symbol(kernel, s)
        return g * np.exp(-tau[None, :] * s * g)
    return transform


def _contour_safe(kernel: TimeKernel, t: float, tau: np.ndarray) -> np.ndarray:
    """
    Whether the Talbot sum for phi(t, tau) is free of cancellation.

    For kernels with a leading order above 1/2, exp(-tau s g^(s)) grows on the
    left part of the contour; there the real-axis method is used instead.
    """
    s = talbot_nodes(t)
    g = np.asarray(laplace_symbol(kernel, s[:, None]))
    exponent = t * s.real[:, None] - tau[None, :] * np.real(s[:, None] * g)
    return np.max(exponent[1:], axis=0) <= 0.4 * TALBOT_NODES + CONTOUR_GROWTH_MARGIN


def _raw_density(kernel: TimeKernel, t: float, tau: np.ndarray) -> np.ndarray:
    out = np.empty_like(tau)
    safe = _contour_safe(kernel, t, tau)
    if np.any(safe):
        out[safe] = talbot(_image(kernel, tau[safe]), t)
    if np.any(~safe):
        out[~safe] = gaver_stehfest(_image(kernel, tau[~safe]), t)
    return out


def subordination_density(kernel: TimeKernel, t: float, tau):
    """
    phi(t, tau) at one time t > 0 for one or more tau > 0, clipped at 0.

    Raises:
        DomainError: for nonpositive t or tau
    """
    tau_arr = np.asarray(tau, dtype=float)
    if not t > 0 or np.any(~(tau_arr > 0)):
        raise DomainError("subordination density needs t > 0 and tau > 0")
    raw = _raw_density(kernel, float(t), np.atleast_1d(tau_arr).ravel())
    clipped = np.clip(raw, 0.0, None)
    if np.any(raw < 0):
        logger.debug("clipped negative overshoot %.3e of phi at t=%g", -raw.min(), t)
    clipped = clipped.reshape(tau_arr.shape)
    return float(clipped) if clipped.ndim == 0 else clipped


def subordination_profile(kernel: TimeKernel, t: float, tau_max: float | None = None) -> SubordinationProfile:
    """
    Sample phi(t, .) on [0, tau_max] and check that it integrates to one.

    tau_max starts at 8 times the mean of phi (or the given value) and is
    doubled until phi(t, tau_max) falls below 1e-12 of the peak.

    Raises:
        NormalizationError: if the mass deviates from 1 by more than 1e-2
    """
    if not t > 0:
        raise DomainError("subordination density needs t > 0")
    if tau_max is None:
        mean = float(talbot(lambda s: 1.0 / (s * s * laplace_symbol(kernel, s)), t)[0])
        tau_max = 8.0 * max(mean, 1e-12)

    for _ in range(MAX_DOUBLINGS):
        tau = np.linspace(0.0, tau_max, PROFILE_POINTS)
        raw = _raw_density(kernel, t, tau)
        peak = float(np.max(raw))
        if raw[-1] < TAIL_FRACTION * peak + ABSOLUTE_FLOOR:
            break
        tau_max *= 2.0
    else:
        logger.warning("phi(t=%g) tail not resolved up to tau=%g", t, tau_max)

    density = np.clip(raw, 0.0, None)
    clip_mass = float(simpson(density - raw, x=tau))
    mass = float(simpson(density, x=tau))
    if abs(mass - 1.0) > MASS_TOLERANCE:
        raise NormalizationError(f"phi(t={t:g}, .) integrates to {mass:.6f}")
    if clip_mass > CLIP_TOLERANCE * mass:
        logger.warning("clip mass %.3e of phi at t=%g exceeds %.0e of the total", clip_mass, t, CLIP_TOLERANCE)
    return SubordinationProfile(t=t, tau=tau, density=density, tau_max=float(tau[-1]), mass=mass, clip_mass=clip_mass)
