"""
Numerical verification of the a priori estimates satisfied by the Cauchy
solution: contraction in L^2 and in the general Sobolev norm, continuity at
t = 0, the derivative bound ||d_t p|| <= ||f|| / (e t), the bound on the
time-fractional derivative, decay, positivity and boundedness.
"""
import logging
import math
from typing import Sequence

import numpy as np

from cauchy.norms import norm_l2, weighted_norm
from cauchy.solver import BOUNDARY_TOLERANCE, grid_symbol, propagator
from models.field import Field
from models.kernel import SpaceKernel, TimeKernel
from models.report import PropertyReport
from relaxation.relaxation_function import relaxation_upper_bound

logger = logging.getLogger(__name__)

NORM_RTOL = 1e-12
FD_SLACK = 0.05
FD_STEP = 1e-3
SIGN_TOLERANCE = 1e-8


def _worst(report: PropertyReport, name: str, margins: list[tuple[float, float]], scale: float,
           slack: float = 0.0, detail: str = "") -> None:
    if not margins:
        report.skip(name, "no positive output times")
        return
    t, margin = min(margins, key=lambda item: item[1])
    report.add(name, margin, detail=f"{detail} worst at t={t:g}".strip(), slack=slack * scale)


def verify_cauchy_estimates(
    solution: Sequence[Field],
    initial: Field,
    time_kernel: TimeKernel,
    space_kernel: SpaceKernel,
) -> PropertyReport:
    """Check a solution from solve_cauchy against its theoretical estimates."""
    report = PropertyReport(subject="cauchy")
    initial = initial.with_spectrum()
    grid = initial.grid
    symbol = grid_symbol(space_kernel, grid)
    f_l2 = norm_l2(initial)
    f_mk = weighted_norm(initial.spectrum, symbol, grid.dxi)
    solution = [field.with_spectrum() for field in solution]
    positive = [field for field in solution if field.t > 0]

    _worst(report, "l2_contraction", [(p.t, f_l2 - norm_l2(p)) for p in solution], f_l2, NORM_RTOL)
    _worst(report, "mk_contraction",
           [(p.t, f_mk - weighted_norm(p.spectrum, symbol, grid.dxi)) for p in solution], f_mk, NORM_RTOL)

    smallest = sorted(positive, key=lambda p: p.t)[:3]
    if len(smallest) == 3:
        distances = [weighted_norm(p.spectrum - initial.spectrum, symbol, grid.dxi) for p in smallest]
        report.add("initial_continuity", min(distances[1] - distances[0], distances[2] - distances[1]),
                   detail="||p(t) - f|| must shrink as t decreases", slack=NORM_RTOL * f_mk)
    else:
        report.skip("initial_continuity", "needs three positive output times")

    derivative_l2, derivative_mk, generator, relaxation = [], [], [], []
    for p in positive:
        h = FD_STEP * p.t
        dz = (propagator(time_kernel, space_kernel, grid, p.t + h)
              - propagator(time_kernel, space_kernel, grid, p.t - h)) / (2.0 * h)
        bound = 1.0 / (math.e * p.t)
        derivative_l2.append((p.t, (1.0 + FD_SLACK) * bound * f_l2 - weighted_norm(dz * initial.spectrum, 0.0, grid.dxi)))
        derivative_mk.append((p.t, (1.0 + FD_SLACK) * bound * f_mk - weighted_norm(dz * initial.spectrum, symbol, grid.dxi)))
        generator.append((p.t, f_mk - weighted_norm(symbol * p.spectrum, 0.0, grid.dxi)))
        z = propagator(time_kernel, space_kernel, grid, p.t)
        relaxation.append((p.t, float(np.min(relaxation_upper_bound(time_kernel, symbol, p.t) - z))))
    _worst(report, "time_derivative_bound", derivative_l2, f_l2, detail="m = 1, 5% slack")
    _worst(report, "time_derivative_bound_mk", derivative_mk, f_mk, detail="m = 1, 5% slack")
    _worst(report, "generator_bound", generator, f_mk, NORM_RTOL)
    _worst(report, "relaxation_bound", relaxation, 1.0, NORM_RTOL)

    if positive:
        t_max = max(p.t for p in positive)
        late = weighted_norm(initial.spectrum * propagator(time_kernel, space_kernel, grid, t_max), symbol, grid.dxi)
        early = weighted_norm(initial.spectrum * propagator(time_kernel, space_kernel, grid, t_max / 10.0),
                              symbol, grid.dxi)
        report.add("mk_decay", early - late, detail=f"||p({t_max:g})|| below ||p({t_max / 10:g})||")
    else:
        report.skip("mk_decay", "no positive output times")

    if np.min(initial.values) >= 0:
        _worst(report, "positivity", [(p.t, float(np.min(p.values)) + SIGN_TOLERANCE) for p in solution], 1.0)
    else:
        report.skip("positivity", "initial data takes negative values")
    f_max = float(np.max(initial.values))
    _worst(report, "boundedness", [(p.t, f_max + SIGN_TOLERANCE - float(np.max(p.values))) for p in solution], 1.0)

    for p in solution:
        if p.boundary_density() > BOUNDARY_TOLERANCE:
            report.warnings.append(f"density {p.boundary_density():.3e} at the window boundary at t={p.t:g}")
    logger.info("cauchy estimates: %d checks, passed=%s", len(report.checks), report.passed)
    return report
