"""
Multivariate Mittag-Leffler function

    E_{(a_1..a_m), b}(z_1..z_m) = sum_k sum_{|l|=k} k!/(l_1!..l_m!) prod z_i^{l_i} / Gamma(b + sum a_i l_i),

summed shell by shell in total degree k.
"""
import logging
import math
from functools import lru_cache

import numpy as np
from scipy.special import gammaln, rgamma

from exceptions import DomainError, SeriesTruncationError
from models.params import MultiMLParams

logger = logging.getLogger(__name__)

SERIES_REGIME = 20.0
SHELL_TOLERANCE = 1e-15
CANCELLATION_WARNING = 1e8


@lru_cache(maxsize=4096)
def _compositions(total: int, parts: int) -> np.ndarray:
    """All (l_1..l_parts) of nonnegative integers summing to total, one per row."""
    if parts == 1:
        rows = np.array([[total]])
    else:
        blocks = []
        for first in range(total + 1):
            rest = _compositions(total - first, parts - 1)
            blocks.append(np.column_stack([np.full(len(rest), first), rest]))
        rows = np.vstack(blocks)
    rows.flags.writeable = False
    return rows


def ml_multivariate(params: MultiMLParams) -> float:
    """
    Evaluate the multivariate Mittag-Leffler series.

    Arguments equal to zero drop out of the sum. The series is stopped once a
    shell adds less than 1e-15 of the partial sum past the peak shell.

    Raises:
        DomainError: if sum |z_i| > 20 (outside the series regime)
        SeriesTruncationError: if max_shells shells do not converge
    """
    active = [(a, z) for a, z in zip(params.exponents, params.arguments) if z != 0.0]
    if sum(abs(z) for _, z in active) > SERIES_REGIME:
        raise DomainError(f"sum of |z_i| exceeds {SERIES_REGIME}; use the relaxation inversion route")
    if not active:
        return float(rgamma(params.b))

    exponents = np.array([a for a, _ in active])
    log_abs = np.log(np.abs([z for _, z in active]))
    negative = np.array([z < 0 for _, z in active])

    partial = 0.0
    largest_term = 0.0
    previous_peak = np.inf
    for k in range(params.max_shells + 1):
        l = _compositions(k, len(active))
        log_terms = (gammaln(k + 1.0) - np.sum(gammaln(l + 1.0), axis=1)
                     + l @ log_abs - gammaln(params.b + l @ exponents))
        signs = np.where(np.sum(l[:, negative], axis=1) % 2 == 0, 1.0, -1.0)
        terms = signs * np.exp(log_terms)
        shell = float(np.sum(terms))
        partial += shell
        peak = float(np.max(np.abs(terms)))
        largest_term = max(largest_term, peak)
        if k > 0 and peak < previous_peak and abs(shell) < SHELL_TOLERANCE * abs(partial):
            if largest_term > CANCELLATION_WARNING * abs(partial):
                logger.warning("multivariate Mittag-Leffler lost about %.0f digits to cancellation",
                               math.log10(largest_term / abs(partial)))
            return partial
        previous_peak = peak
    raise SeriesTruncationError(
        f"multivariate Mittag-Leffler series not converged in {params.max_shells} shells",
        partial=partial)
