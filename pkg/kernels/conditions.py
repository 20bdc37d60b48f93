"""
Numeric spot checks of the structural conditions on time and space kernels.

The checks are necessary conditions only. A Stieltjes transform is completely
monotone, so its alternating finite differences are nonnegative; a negative
definite symbol makes the matrices [zeta(x_j) + zeta(x_k) - zeta(x_j - x_k)]
positive semidefinite. Passing either does not prove admissibility.
"""
import logging
from typing import get_args

import numpy as np
from scipy.special import comb

from exceptions import QuadratureError
from kernels.space_kernel import kernel_function, zeta, zeta_quadrature
from kernels.time_kernel import g_laplace
from models.kernel import SpaceKernel, TemperedCaputoKernel, TimeKernel
from models.report import ConditionReport

logger = logging.getLogger(__name__)

S_GRID = np.logspace(-3, 3, 200)
X_GRID = np.logspace(-3, 2, 120)
XI_SAMPLES = np.array([0.25, 0.5, 1.0, 2.0, 4.0, 8.0])
DIFFERENCE_STEP = 0.1
MAX_DIFFERENCE_ORDER = 4
MONOTONE_SLACK = 1e-12
PSD_SLACK = 1e-9
PSD_TRIALS = 8
PSD_MAX_POINTS = 6
PSD_SEED = 20240611


def alternating_differences(values_at: callable, s: np.ndarray, order: int) -> np.ndarray:
    """(-1)^m Delta_h^m f(s) with the forward step h = 0.1 s, normalized by f(s)."""
    h = DIFFERENCE_STEP * s
    total = np.zeros_like(s)
    for i in range(order + 1):
        total += (-1.0) ** (order - i) * comb(order, i) * values_at(s + i * h)
    return (-1.0) ** order * total / np.abs(values_at(s))


def _check_time_kernel(kernel: TimeKernel, report: ConditionReport) -> None:
    g_hat = g_laplace(kernel, S_GRID)
    report.add("laplace_positive", float(np.min(g_hat)),
               detail="min of the Laplace transform on s in [1e-3, 1e3]")

    def evaluate(s):
        return g_laplace(kernel, s)

    for order in range(1, MAX_DIFFERENCE_ORDER + 1):
        worst = float(np.min(alternating_differences(evaluate, S_GRID, order)))
        report.add(f"complete_monotonicity_order_{order}", worst, slack=MONOTONE_SLACK,
                   detail="alternating finite differences of the Laplace transform")

    s_g = S_GRID * g_hat
    report.add("growth_at_infinity", float(np.log(s_g[-1]) - np.log(s_g[-34])),
               detail="s*g(s) must increase without bound as s grows")
    report.add("vanishing_at_zero", float(np.log(s_g[33]) - np.log(s_g[0])),
               detail="s*g(s) must tend to 0 as s tends to 0")
    if isinstance(kernel, TemperedCaputoKernel) and kernel.rate > 0:
        report.skip("divergence_at_zero", "waived for tempered kernels with positive rate")
    else:
        report.add("divergence_at_zero", float(np.log(g_hat[0]) - np.log(g_hat[33])),
                   detail="g(s) must grow without bound as s tends to 0")


def _check_space_kernel(kernel: SpaceKernel, report: ConditionReport) -> None:
    k = kernel_function(kernel)
    right, left = k(X_GRID), k(-X_GRID)
    report.add("kernel_positive", float(np.min(np.minimum(right, left))),
               detail="min of k(x) on sampled |x| in [1e-3, 1e2]")
    asymmetry = float(np.max(np.abs(right - left) / np.abs(right)))
    report.add("kernel_even", 1e-12 - asymmetry, detail=f"max relative asymmetry {asymmetry:.3e}")

    try:
        zeta_quadrature(kernel, 1.0)
        report.add("integrable_near_origin_and_tail", 0.0,
                   detail="symbol quadrature converged at xi = 1")
    except QuadratureError as exc:
        report.add("integrable_near_origin_and_tail", -1.0, detail=str(exc))
        return

    values = np.asarray(zeta(kernel, XI_SAMPLES))
    mirrored = np.asarray(zeta(kernel, -XI_SAMPLES))
    report.add("symbol_at_origin", -abs(zeta(kernel, 0.0)), detail="zeta(0) must vanish")
    report.add("symbol_nonnegative", float(np.min(values)))
    report.add("symbol_even", float(np.min(1e-12 * (1.0 + values) - np.abs(values - mirrored))))

    rng = np.random.default_rng(PSD_SEED)
    worst = np.inf
    for _ in range(PSD_TRIALS):
        points = rng.uniform(-5.0, 5.0, size=int(rng.integers(2, PSD_MAX_POINTS + 1)))
        at_points = np.asarray(zeta(kernel, points))
        differences = np.asarray(zeta(kernel, points[:, None] - points[None, :]))
        matrix = at_points[:, None] + at_points[None, :] - differences
        scale = max(1.0, float(np.max(np.abs(matrix))))
        worst = min(worst, float(np.min(np.linalg.eigvalsh(matrix))) / scale)
    report.add("negative_definite_symbol", worst, slack=PSD_SLACK,
               detail=f"min scaled eigenvalue over {PSD_TRIALS} random point sets")


def check_conditions(kernel: TimeKernel | SpaceKernel) -> ConditionReport:
    """
    Spot-check the necessary structural conditions of a kernel.

    Returns a report; nothing is raised for a failing kernel.
    """
    report = ConditionReport(subject=type(kernel).__name__)
    if isinstance(kernel, get_args(TimeKernel)):
        _check_time_kernel(kernel, report)
    else:
        _check_space_kernel(kernel, report)
    logger.info("condition checks for %s: %s", report.subject,
                "passed" if report.passed else "failed")
    return report
