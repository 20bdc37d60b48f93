"""
Numerical verification of the estimates satisfied by the bounded-domain
solution, evaluated in mode space where the L^2(B) norm is sqrt(sum omega_j^2)
and the operator graph norm is sqrt(sum (lambda_j omega_j)^2).
"""
import logging
import math
from typing import Sequence

import numpy as np

from ibvp.solver import domain_norm
from models.bounded import DomainField, EigenSystem
from models.kernel import TimeKernel
from models.report import PropertyReport
from relaxation.relaxation_function import relaxation_upper_bound, relaxation_z

logger = logging.getLogger(__name__)

NORM_RTOL = 1e-12
FD_SLACK = 0.05
FD_STEP = 1e-3
DEFAULT_DECAY_FACTOR = 0.5


def _worst(report: PropertyReport, name: str, margins: list[tuple[float, float]], slack: float = 0.0,
           detail: str = "") -> None:
    if not margins:
        report.skip(name, "no positive output times")
        return
    t, margin = min(margins, key=lambda item: item[1])
    report.add(name, margin, detail=f"{detail} worst at t={t:g}".strip(), slack=slack)


def verify_ibvp_estimates(
    solution: Sequence[DomainField],
    f: np.ndarray,
    eig: EigenSystem,
    time_kernel: TimeKernel,
    decay_factor: float = DEFAULT_DECAY_FACTOR,
) -> PropertyReport:
    """
    Check a solution from solve_ibvp against its theoretical estimates.

    Args:
        decay_factor: the late-time check requires ||p(T)||_D < decay_factor ||p(T/10)||_D;
            slowly relaxing kernels (alpha around 0.3 or below) need a factor closer to 1
    """
    report = PropertyReport(subject="ibvp")
    lam = eig.eigenvalues
    rates = np.maximum(lam, 0.0)
    c = eig.coefficients(f)
    f_l2 = float(np.sqrt(np.sum(c ** 2)))
    f_d = domain_norm(lam, c)
    positive = sorted((p for p in solution if p.t > 0), key=lambda p: p.t)

    _worst(report, "l2_contraction",
           [(p.t, f_l2 - float(np.sqrt(np.sum(p.modes ** 2)))) for p in solution], NORM_RTOL * f_l2)
    _worst(report, "d_contraction", [(p.t, f_d - domain_norm(lam, p.modes)) for p in solution],
           NORM_RTOL * f_d)
    _worst(report, "generator_bound",
           [(p.t, f_d - float(np.sqrt(np.sum((eig.matrix @ p.values) ** 2) * eig.dx))) for p in positive],
           1e-8 * f_d, detail="||D_(g) p(t)|| = ||A p(t)||")

    if len(positive) >= 3:
        distances = [domain_norm(lam, p.modes - c) for p in positive[:3]]
        report.add("initial_continuity", min(distances[1] - distances[0], distances[2] - distances[1]),
                   detail="||p(t) - f||_D must shrink as t decreases", slack=NORM_RTOL * f_d)
    else:
        report.skip("initial_continuity", "needs three positive output times")

    derivative_l2, derivative_d, relaxation = [], [], []
    for p in positive:
        h = FD_STEP * p.t
        dz = (np.asarray(relaxation_z(time_kernel, rates, p.t + h))
              - np.asarray(relaxation_z(time_kernel, rates, p.t - h))) / (2.0 * h)
        bound = (1.0 + FD_SLACK) / (math.e * p.t)
        derivative_l2.append((p.t, bound * f_l2 - float(np.sqrt(np.sum((dz * c) ** 2)))))
        derivative_d.append((p.t, bound * f_d - domain_norm(lam, dz * c)))
        z = np.asarray(relaxation_z(time_kernel, rates, p.t))
        relaxation.append((p.t, float(np.min(relaxation_upper_bound(time_kernel, rates, p.t) - z))))
    _worst(report, "time_derivative_bound", derivative_l2, detail="m = 1, 5% slack")
    _worst(report, "time_derivative_bound_d", derivative_d, detail="m = 1, 5% slack")
    _worst(report, "relaxation_bound", relaxation, NORM_RTOL)

    steps = sorted(solution, key=lambda p: p.t)
    drops = [(b.t, float(np.min(np.abs(a.modes) - np.abs(b.modes))))
             for a, b in zip(steps, steps[1:]) if b.t > a.t]
    _worst(report, "mode_monotonicity", drops, NORM_RTOL * f_l2)

    if positive:
        t_max = positive[-1].t
        late = domain_norm(lam, c * np.asarray(relaxation_z(time_kernel, rates, t_max)))
        early = domain_norm(lam, c * np.asarray(relaxation_z(time_kernel, rates, t_max / 10.0)))
        report.add("d_decay", decay_factor * early - late,
                   detail=f"||p({t_max:g})||_D below {decay_factor:g} ||p({t_max / 10:g})||_D")
    else:
        report.skip("d_decay", "no positive output times")

    logger.info("ibvp estimates: %d checks, passed=%s", len(report.checks), report.passed)
    return report
