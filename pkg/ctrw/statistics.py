"""
Ensemble statistics and the targets they are compared with.
"""
from typing import Sequence

import numpy as np

from exceptions import DomainError
from kernels.space_kernel import zeta
from models.ensemble import EnsembleResult, EnsembleStatistics
from models.field import Field
from models.kernel import SpaceKernel, TimeKernel
from relaxation.msd import msd_loglog_slope
from relaxation.relaxation_function import relaxation_z

DEFAULT_BINS = 401
DEFAULT_RANGE = (-20.0, 20.0)
DEFAULT_XI = (0.5, 1.0, 2.0)

__all__ = ["empirical_statistics", "l1_distance", "msd_loglog_slope", "pde_target", "propagator_target"]


def empirical_statistics(
    result: EnsembleResult,
    bins: int = DEFAULT_BINS,
    hist_range: tuple[float, float] = DEFAULT_RANGE,
    xi: Sequence[float] = DEFAULT_XI,
) -> EnsembleStatistics:
    """
    MSD, density histograms and empirical characteristic function per observation time.

    Histograms are normalized by the total number of walkers, so mass
    outside hist_range is missing from them.
    """
    positions = result.positions
    edges = np.linspace(hist_range[0], hist_range[1], bins + 1)
    width = np.diff(edges)
    histograms = np.array([
        np.histogram(positions[:, j], bins=edges)[0] / (result.particles * width)
        for j in range(len(result.times))
    ])
    xi_arr = np.asarray(xi, dtype=float)
    phases = positions[:, :, None] * xi_arr[None, None, :]
    ecf = np.mean(np.cos(phases), axis=0) + 1j * np.mean(np.sin(phases), axis=0)
    stderr = np.std(np.cos(phases), axis=0) / np.sqrt(result.particles)
    return EnsembleStatistics(
        times=result.times,
        msd=np.mean(positions ** 2, axis=0),
        bin_edges=edges,
        histograms=histograms,
        xi=xi_arr,
        ecf=ecf,
        ecf_stderr=stderr,
    )


def propagator_target(time_kernel: TimeKernel, space_kernel: SpaceKernel, xi, t: float, scale: float = 1.0):
    """Exact characteristic function of the walk, Z(t, (1 - exp(-eps zeta(xi))) / eps)."""
    if scale <= 0:
        raise DomainError(f"scale must be positive, got {scale}")
    rate = -np.expm1(-scale * np.asarray(zeta(space_kernel, xi))) / scale
    return relaxation_z(time_kernel, rate, t)


def pde_target(time_kernel: TimeKernel, space_kernel: SpaceKernel, xi, t: float):
    """Fourier transform of the equation's fundamental solution, Z(t, zeta(xi))."""
    return relaxation_z(time_kernel, zeta(space_kernel, xi), t)


def l1_distance(bin_edges: np.ndarray, density: np.ndarray, field: Field) -> float:
    """sum_b |h_b - p(c_b)| width_b with the solver density interpolated at the bin centres."""
    edges = np.asarray(bin_edges, dtype=float)
    centers = 0.5 * (edges[1:] + edges[:-1])
    reference = np.interp(centers, field.grid.x, field.values, left=0.0, right=0.0)
    return float(np.sum(np.abs(np.asarray(density) - reference) * np.diff(edges)))
