"""
Two-parameter Mittag-Leffler function E_{alpha,beta}(z) and its derivatives
on the real axis.

Regimes on the negative axis:

* power series while the largest term stays below 1e4 times the first one
  (no cancellation worth mentioning) and the series tail is negligible by
  300 terms; this caps the switch radius at 5;
* an exact integral representation up to |z| = 50 (alpha < 1);
* the asymptotic expansion -sum z^{-k}/Gamma(beta - alpha k) beyond that.

Derivatives beyond the series radius are computed by Talbot inversion of
j! s^{alpha-beta} / (s^alpha - z)^{j+1} at t = 1, or by the term-wise
differentiated asymptotic expansion for |z| >= 50 + 10 j.
All functions accept scalars or numpy arrays of z.
"""
import logging
import math
from functools import lru_cache

import numpy as np
from pydantic import ValidationError
from scipy.integrate import quad_vec
from scipy.optimize import brentq
from scipy.special import gammaln, rgamma

from exceptions import CrossCheckError, DomainError, MittagLefflerOverflowError, SeriesTruncationError
from models.params import MLParams
from specfun.laplace import talbot

logger = logging.getLogger(__name__)

SERIES_TERMS = 300
SERIES_RADIUS_CAP = 5.0
MAX_TERM_GROWTH = 1e4
TAIL_TOLERANCE = 1e-17
ASYMPTOTIC_RADIUS = 50.0
ASYMPTOTIC_TERMS = 100
INTEGRAL_RTOL = 1e-12
INTEGRAL_CUTOFF = 80.0
OVERFLOW_LOG = 709.0


def _validated(alpha: float, beta: float, derivative: int = 0) -> MLParams:
    try:
        return MLParams(alpha=alpha, beta=beta, derivative=derivative)
    except ValidationError as exc:
        raise DomainError(f"invalid Mittag-Leffler parameters: {exc.errors()[0]['msg']}") from exc


def _as_output(z_arr: np.ndarray, values: np.ndarray):
    return float(values) if z_arr.ndim == 0 else values


def _log_coefficients(alpha: float, beta: float, j: int, k: np.ndarray) -> np.ndarray:
    """log of (k+j)!/k! / Gamma(alpha (k+j) + beta)."""
    return gammaln(k + j + 1.0) - gammaln(k + 1.0) - gammaln(alpha * (k + j) + beta)


@lru_cache(maxsize=1024)
def series_radius(alpha: float, beta: float, derivative: int = 0) -> float:
    """Largest |z| on the negative axis where the power series is used."""
    k = np.arange(SERIES_TERMS + 1)
    log_coefficients = _log_coefficients(alpha, beta, derivative, k)

    def excess(log_r: float) -> float:
        terms = k * log_r + log_coefficients
        growth = terms.max() - terms[0] - math.log(MAX_TERM_GROWTH)
        tail = terms[-1] - terms[0] - math.log(TAIL_TOLERANCE)
        return max(growth, tail)

    upper = math.log(SERIES_RADIUS_CAP)
    if excess(upper) <= 0:
        return SERIES_RADIUS_CAP
    return math.exp(brentq(excess, math.log(1e-3), upper, xtol=1e-12))


def _series(alpha: float, beta: float, j: int, z: np.ndarray) -> np.ndarray:
    k = np.arange(SERIES_TERMS + 1)
    log_coefficients = _log_coefficients(alpha, beta, j, k)
    z = np.asarray(z, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_abs = np.log(np.abs(z))[..., None]
        exponent = np.where(k == 0, 0.0, k * log_abs)
    magnitude = np.exp(exponent + log_coefficients)
    sign = np.where(z[..., None] < 0, np.where(k % 2 == 0, 1.0, -1.0), 1.0)
    return np.sum(sign * magnitude, axis=-1)


def _series_positive(alpha: float, beta: float, j: int, x: float) -> float:
    """Series on the positive axis; all terms are positive, so only overflow can go wrong."""
    if x == 0.0:
        return math.exp(_log_coefficients(alpha, beta, j, np.array([0.0]))[0])
    terms_needed = int(min(1e6, SERIES_TERMS + 4.0 * x ** (1.0 / alpha) / alpha + 4.0 * j))
    k = np.arange(terms_needed + 1)
    log_terms = k * math.log(x) + _log_coefficients(alpha, beta, j, k)
    peak = float(np.max(log_terms))
    if log_terms[-1] - peak > math.log(TAIL_TOLERANCE):
        raise SeriesTruncationError(
            f"Mittag-Leffler series at z={x:g} not converged in {terms_needed} terms",
            partial=float(np.sum(np.exp(log_terms - peak))) * math.exp(min(peak, OVERFLOW_LOG)))
    total = float(np.sum(np.exp(log_terms - peak)))
    if peak + math.log(total) > OVERFLOW_LOG:
        raise MittagLefflerOverflowError(
            f"E_{{{alpha},{beta}}}^({j})({x:g}) exceeds the double range")
    return total * math.exp(peak)


def _integral(alpha: float, beta: float, z: np.ndarray) -> np.ndarray:
    """
    E_{alpha,beta}(z) for z < 0 and alpha < 1 from

        (1/pi) int_0^inf r^{alpha-beta} e^{-r} [r^alpha sin(pi(1-beta)) - z sin(pi(1-beta+alpha))]
               / (r^{2 alpha} - 2 r^alpha z cos(pi alpha) + z^2) dr,

    valid for beta < 1 + alpha; larger beta is reduced with
    E_{alpha,beta}(z) = (E_{alpha,beta-alpha}(z) - 1/Gamma(beta-alpha)) / z.
    """
    if beta >= 1.0 + alpha:
        return (_integral(alpha, beta - alpha, z) - rgamma(beta - alpha)) / z

    sin_a = math.sin(math.pi * (1.0 - beta))
    sin_b = math.sin(math.pi * (1.0 - beta + alpha))
    cos_c = math.cos(math.pi * alpha)
    power = alpha - beta + 1.0

    def smooth_part(r):
        r_alpha = r ** alpha
        return (np.exp(-r) * (r_alpha * sin_a - z * sin_b)
                / (r_alpha * r_alpha - 2.0 * r_alpha * z * cos_c + z * z) / math.pi)

    # r = v^{1/power} removes the r^{alpha-beta} endpoint singularity on [0, 1]
    near, _ = quad_vec(lambda v: smooth_part(v ** (1.0 / power)) / power, 0.0, 1.0,
                       epsabs=1e-300, epsrel=INTEGRAL_RTOL, norm="max")
    far, _ = quad_vec(lambda r: r ** (alpha - beta) * smooth_part(r), 1.0, INTEGRAL_CUTOFF,
                      epsabs=1e-300, epsrel=INTEGRAL_RTOL, norm="max")
    return np.asarray(near + far, dtype=float)


def _asymptotic(alpha: float, beta: float, j: int, z: np.ndarray) -> np.ndarray:
    """Optimally truncated -sum_k d^j/dz^j z^{-k} / Gamma(beta - alpha k)."""
    k = np.arange(1, ASYMPTOTIC_TERMS + 1)
    coefficient = rgamma(beta - alpha * k) * np.exp(gammaln(k + j) - gammaln(k))
    z = np.asarray(z, dtype=float)
    terms = -((-1.0) ** j) * coefficient * z[..., None] ** (-(k + j).astype(float))
    magnitude = np.abs(terms)
    magnitude = np.where(coefficient == 0.0, np.inf, magnitude)
    cutoff = np.argmin(magnitude, axis=-1)[..., None]
    return np.sum(np.where(k - 1 <= cutoff, terms, 0.0), axis=-1)


def _inverted(alpha: float, beta: float, j: int, z: np.ndarray) -> np.ndarray:
    """E^{(j)}_{alpha,beta}(z) as the t = 1 value of the inverse of j! s^{alpha-beta}/(s^alpha - z)^{j+1}."""
    z = np.atleast_1d(np.asarray(z, dtype=float))
    factor = math.factorial(j)

    def transform(s):
        return factor * s ** (alpha - beta) / (s ** alpha - z[None, :]) ** (j + 1)

    return talbot(transform, 1.0)


def ml_series(alpha: float, beta: float, z, derivative: int = 0):
    """Power-series evaluation regardless of regime (used to check the switch points)."""
    _validated(alpha, beta, derivative)
    z_arr = np.asarray(z, dtype=float)
    return _as_output(z_arr, _series(alpha, beta, derivative, z_arr))


def ml_large_argument(alpha: float, beta: float, z):
    """Evaluation for z < 0 without the power series: integral form below |z| = 50, asymptotics above."""
    _validated(alpha, beta)
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr >= 0):
        raise DomainError("large-argument evaluation is defined for negative z only")
    flat = np.atleast_1d(z_arr).ravel()
    out = np.empty_like(flat)
    far = np.abs(flat) >= ASYMPTOTIC_RADIUS
    if np.any(far):
        out[far] = _asymptotic(alpha, beta, 0, flat[far])
    if np.any(~far):
        if alpha < 1.0:
            out[~far] = _integral(alpha, beta, flat[~far])
        elif beta == 1.0:
            out[~far] = np.exp(flat[~far])
        else:
            out[~far] = _inverted(alpha, beta, 0, flat[~far])
    return _as_output(z_arr, out.reshape(z_arr.shape))


def ml(alpha: float, beta: float, z):
    """
    Two-parameter Mittag-Leffler function sum_k z^k / Gamma(alpha k + beta).

    Args:
        alpha: order in (0, 1]
        beta: second parameter > 0
        z: real scalar or array

    Raises:
        DomainError: for parameters outside their ranges
        MittagLefflerOverflowError: if the value exceeds the double range (z > 0)
    """
    _validated(alpha, beta)
    z_arr = np.asarray(z, dtype=float)
    flat = np.atleast_1d(z_arr).ravel()
    out = np.empty_like(flat)
    radius = series_radius(alpha, beta)

    inside = np.abs(flat) <= radius
    positive = flat > radius
    negative = flat < -radius
    if np.any(inside):
        out[inside] = _series(alpha, beta, 0, flat[inside])
    for index in np.flatnonzero(positive):
        out[index] = _series_positive(alpha, beta, 0, float(flat[index]))
    if np.any(negative):
        out[negative] = np.atleast_1d(ml_large_argument(alpha, beta, flat[negative]))
    return _as_output(z_arr, out.reshape(z_arr.shape))


def ml_derivative(alpha: float, beta: float, j: int, z):
    """
    j-th derivative of E_{alpha,beta} on the nonpositive axis.

    For beta = 1 + j - j alpha the result is bounded in modulus by
    j!/Gamma(alpha j + beta); a violation is reported as a CrossCheckError.

    Raises:
        DomainError: for z > 0 or parameters outside their ranges
    """
    params = _validated(alpha, beta, j)
    if params.derivative == 0:
        return ml(alpha, beta, z)
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr > 0):
        raise DomainError("derivatives are evaluated for z <= 0 only")

    flat = np.atleast_1d(z_arr).ravel()
    out = np.empty_like(flat)
    radius = series_radius(alpha, beta, j)
    inside = np.abs(flat) <= radius
    far = np.abs(flat) >= ASYMPTOTIC_RADIUS + 10.0 * j
    middle = ~inside & ~far
    if np.any(inside):
        out[inside] = _series(alpha, beta, j, flat[inside])
    if np.any(far):
        out[far] = _asymptotic(alpha, beta, j, flat[far])
    if np.any(middle):
        out[middle] = _inverted(alpha, beta, j, flat[middle])

    if math.isclose(beta, 1.0 + j - j * alpha, rel_tol=1e-12):
        bound = math.factorial(j) * float(rgamma(alpha * j + beta))
        worst = int(np.argmax(np.abs(out)))
        if abs(out[worst]) > bound * (1.0 + 1e-8):
            raise CrossCheckError(
                f"|E^({j})| exceeds its bound at z={flat[worst]:g}",
                first=float(out[worst]), second=bound)
    return _as_output(z_arr, out.reshape(z_arr.shape))
