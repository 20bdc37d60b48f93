"""
Waiting-time and jump samplers of the random walk.

The waiting-time law has Laplace transform 1 / (1 + eps s g^(s)), the jump
law has characteristic function exp(-eps zeta(xi)). Caputo waiting times and
Riesz jumps are sampled in closed form; every other kernel goes through a
tabulated inverse CDF built from the transforms.
"""
import logging

import numpy as np

from exceptions import DensityReconstructionError, DomainError, InversionQualityError
from kernels.space_kernel import zeta, zeta_quadrature, zeta_second_derivative_at_zero
from models.ensemble import SamplerMethod, SamplerTable
from models.field import SQRT_2PI, Grid
from models.kernel import (
    CaputoKernel,
    Divergent,
    MultiTermRieszKernel,
    RieszKernel,
    SpaceKernel,
    TemperedCaputoKernel,
    TemperedRieszKernel,
    TimeKernel,
)
from relaxation.relaxation_function import relaxation_z

logger = logging.getLogger(__name__)

# waiting-time table
SURVIVAL_START = 1e-4
SURVIVAL_END = 1e-3
TABLE_START = 1.0
MAX_DOUBLINGS = 64
POINTS_PER_DECADE = 40
MONOTONE_TOLERANCE = 1e-6

# jump density table
CUTOFF_EXPONENT = 40.0
TEMPERED_WINDOW = 60.0
CUSTOM_WINDOW = 40.0
MAX_TABLE_POINTS = 2 ** 18
SYMBOL_SAMPLES = 1024
CLIP_WARNING = 1e-4
CLIP_LIMIT = 1e-3


def _closed_form_waiting(kernel: TimeKernel) -> bool:
    return isinstance(kernel, CaputoKernel) or (
        isinstance(kernel, TemperedCaputoKernel) and kernel.rate == 0.0)


def survival(kernel: TimeKernel, t, scale: float = 1.0):
    """P(T > t) = Z(t, 1/eps), the inverse transform of g^ / (s g^ + 1/eps)."""
    return relaxation_z(kernel, 1.0 / scale, t)


def build_waiting_sampler(kernel: TimeKernel, scale: float = 1.0) -> SamplerTable:
    """
    Sampler of the waiting times.

    Raises:
        InversionQualityError: if the tabulated survival increases by more
            than 1e-6 or does not fall below 1e-3 within the doubling budget
    """
    if scale <= 0:
        raise DomainError(f"scale must be positive, got {scale}")
    if _closed_form_waiting(kernel):
        return SamplerTable(source=kernel, method=SamplerMethod.CLOSED_FORM, scale=scale)

    end = TABLE_START
    for _ in range(MAX_DOUBLINGS):
        if survival(kernel, end, scale) < SURVIVAL_END:
            break
        end *= 2.0
    else:
        raise InversionQualityError(f"survival still above {SURVIVAL_END:g} at t={end:g}")

    decades = np.log10(end / SURVIVAL_START)
    t = np.logspace(np.log10(SURVIVAL_START), np.log10(end), int(np.ceil(decades * POINTS_PER_DECADE)) + 1)
    psi = np.asarray(survival(kernel, t, scale))
    rise = float(np.max(np.diff(psi), initial=0.0))
    if rise > MONOTONE_TOLERANCE:
        raise InversionQualityError(f"tabulated survival increases by {rise:.3e}")
    psi = np.minimum.accumulate(np.clip(psi, 0.0, 1.0))

    # power-law continuation fitted over the last decade
    last = (t >= end / 10.0) & (psi > 0)
    slope = np.polyfit(np.log(t[last]), np.log(psi[last]), 1)[0]
    if slope >= 0:
        raise InversionQualityError(f"survival tail does not decay (log-slope {slope:g})")

    abscissae = np.concatenate([[0.0], t])
    cdf = np.concatenate([[0.0], 1.0 - psi])
    keep = np.concatenate([[True], np.diff(cdf) > 0])
    logger.debug("waiting table with %d points up to t=%g, tail exponent %.3f", int(keep.sum()), end, -slope)
    return SamplerTable(
        source=kernel,
        method=SamplerMethod.TRANSFORM_INVERTED,
        scale=scale,
        abscissae=abscissae[keep],
        cdf=cdf[keep],
        tail_exponent=float(-slope),
    )


def _jump_window(kernel: SpaceKernel, scale: float, half_width: float | None) -> float:
    if half_width is not None:
        return half_width
    if isinstance(kernel, TemperedRieszKernel):
        return TEMPERED_WINDOW / kernel.truncation
    curvature = zeta_second_derivative_at_zero(kernel)
    if isinstance(curvature, Divergent):
        raise DomainError(f"a window half-width is required for this kernel: {curvature.reason}")
    return CUSTOM_WINDOW * np.sqrt(scale * curvature)


def _cutoff_frequency(kernel: SpaceKernel, scale: float, limit: float) -> float:
    """Smallest xi (doubling from 1) with eps zeta(xi) >= 40, capped at limit."""
    xi = 1.0
    while xi < limit and scale * zeta(kernel, xi) < CUTOFF_EXPONENT:
        xi *= 2.0
    return min(xi, limit)


def _interpolated_symbol(kernel: SpaceKernel, xi: np.ndarray) -> np.ndarray:
    """zeta on |xi| by log-log interpolation between quadrature samples."""
    magnitude = np.abs(xi)
    positive = magnitude[magnitude > 0]
    nodes = np.logspace(np.log10(positive.min()), np.log10(positive.max()), SYMBOL_SAMPLES)
    values = np.asarray(zeta_quadrature(kernel, nodes))
    out = np.zeros_like(magnitude)
    out[magnitude > 0] = np.exp(np.interp(np.log(positive), np.log(nodes), np.log(values)))
    return out


def build_jump_sampler(kernel: SpaceKernel, scale: float = 1.0, half_width: float | None = None) -> SamplerTable:
    """
    Sampler of the jumps.

    Args:
        half_width: half-width of the density window for tabulated kernels;
            defaults to 60/h for tempered kernels

    Raises:
        DensityReconstructionError: if the negative ripple of the rebuilt
            density carries mass >= 1e-3
    """
    if scale <= 0:
        raise DomainError(f"scale must be positive, got {scale}")
    if isinstance(kernel, (RieszKernel, MultiTermRieszKernel)):
        return SamplerTable(source=kernel, method=SamplerMethod.CLOSED_FORM, scale=scale)

    window = _jump_window(kernel, scale, half_width)
    xi_max = _cutoff_frequency(kernel, scale, np.pi * MAX_TABLE_POINTS / (2.0 * window))
    points = int(min(MAX_TABLE_POINTS, max(1024, 2 ** int(np.ceil(np.log2(2.0 * window * xi_max / np.pi))))))
    grid = Grid(half_width=window, points=points)

    characteristic = np.exp(-scale * _interpolated_symbol(kernel, grid.xi))
    density = grid.inverse(characteristic / SQRT_2PI).real
    clip_mass = float(-np.sum(np.minimum(density, 0.0)) * grid.dx)
    if clip_mass >= CLIP_LIMIT:
        raise DensityReconstructionError(f"negative ripple carries mass {clip_mass:.3e}; widen the window")
    if clip_mass >= CLIP_WARNING:
        logger.warning("jump density clip mass %.3e", clip_mass)

    mass = np.cumsum(np.maximum(density, 0.0)) * grid.dx
    edges = np.concatenate([[grid.x[0] - 0.5 * grid.dx], grid.x + 0.5 * grid.dx])
    cdf = np.concatenate([[0.0], mass / mass[-1]])
    keep = np.concatenate([[True], np.diff(cdf) > 0])
    logger.debug("jump table on %d points, window %g, clip mass %.2e", points, window, clip_mass)
    return SamplerTable(
        source=kernel,
        method=SamplerMethod.TRANSFORM_INVERTED,
        scale=scale,
        abscissae=edges[keep],
        cdf=cdf[keep],
        clip_mass=clip_mass,
    )


def symmetric_stable(rng: np.random.Generator, index: float, size: int) -> np.ndarray:
    """
    Symmetric stable variates with characteristic function exp(-|xi|^index),
    by the Chambers-Mallows-Stuck construction.
    """
    v = rng.uniform(-0.5 * np.pi, 0.5 * np.pi, size)
    w = rng.exponential(1.0, size)
    return (np.sin(index * v) / np.cos(v) ** (1.0 / index)
            * (np.cos((1.0 - index) * v) / w) ** ((1.0 - index) / index))


def _tabulated(table: SamplerTable, u: np.ndarray) -> np.ndarray:
    inside = u <= table.cdf[-1]
    out = np.interp(u, table.cdf, table.abscissae)
    if table.tail_exponent is not None and not np.all(inside):
        end, psi_end = table.abscissae[-1], 1.0 - table.cdf[-1]
        out[~inside] = end * ((1.0 - u[~inside]) / psi_end) ** (-1.0 / table.tail_exponent)
    return out


def draw_waiting_times(table: SamplerTable, rng: np.random.Generator, size: int) -> np.ndarray:
    if table.method is SamplerMethod.TRANSFORM_INVERTED:
        return _tabulated(table, rng.random(size))
    alpha = table.source.alpha
    u = 1.0 - rng.random(size)
    v = 1.0 - rng.random(size)
    # sin(a pi (1 - v)) / sin(a pi v) == sin(a pi) / tan(a pi v) - cos(a pi)
    shape = np.sin(alpha * np.pi * (1.0 - v)) / np.sin(alpha * np.pi * v)
    return table.scale ** (1.0 / alpha) * (-np.log(u)) * shape ** (1.0 / alpha)


def draw_jumps(table: SamplerTable, rng: np.random.Generator, size: int) -> np.ndarray:
    kernel = table.source
    if table.method is SamplerMethod.TRANSFORM_INVERTED:
        return _tabulated(table, rng.random(size))
    if isinstance(kernel, RieszKernel):
        spread = (table.scale * zeta(kernel, 1.0)) ** (1.0 / (2.0 * kernel.beta))
        return spread * symmetric_stable(rng, 2.0 * kernel.beta, size)
    return sum((table.scale * weight) ** (1.0 / (2.0 * order)) * symmetric_stable(rng, 2.0 * order, size)
               for weight, order in zip(kernel.weights, kernel.orders))
