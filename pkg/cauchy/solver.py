"""
Cauchy problem on the line, D_(g) p = D_(k) p with p(0) = f, solved by
spectral multiplication:

    p~(t, xi) = f~(xi) Z(t, zeta(xi)).

The DFT makes the problem periodic on [-L, L); the window has to be wide
enough that the solution is negligible at its ends, which is reported.
"""
import logging
from functools import lru_cache
from typing import List, Sequence

import numpy as np

from exceptions import BoundaryMassError, DomainError
from kernels.space_kernel import zeta
from models.field import Field, Grid
from models.kernel import SpaceKernel, TimeKernel
from relaxation.relaxation_function import relaxation_z

logger = logging.getLogger(__name__)

INITIAL_BOUNDARY_TOLERANCE = 1e-12
BOUNDARY_TOLERANCE = 1e-6
IMAGINARY_TOLERANCE = 1e-10


@lru_cache(maxsize=32)
def _cached_symbol(space_kernel: SpaceKernel, half_width: float, points: int) -> np.ndarray:
    grid = Grid(half_width=half_width, points=points)
    values = np.asarray(zeta(space_kernel, grid.xi), dtype=float)
    values.flags.writeable = False
    return values


def grid_symbol(space_kernel: SpaceKernel, grid: Grid) -> np.ndarray:
    """zeta at the grid frequencies, computed once per (kernel, L, N) and read-only."""
    return _cached_symbol(space_kernel, grid.half_width, grid.points)


def propagator(time_kernel: TimeKernel, space_kernel: SpaceKernel, grid: Grid, t: float) -> np.ndarray:
    """Z(t, zeta(xi_m)) on the grid frequencies."""
    symbol = grid_symbol(space_kernel, grid)
    rates, inverse = np.unique(symbol, return_inverse=True)
    return np.asarray(relaxation_z(time_kernel, rates, t))[inverse]


def _to_field(grid: Grid, spectrum: np.ndarray, t: float) -> Field:
    complex_values = grid.inverse(spectrum)
    residue = float(np.max(np.abs(complex_values.imag)))
    scale = max(1.0, float(np.max(np.abs(complex_values.real))))
    if residue > IMAGINARY_TOLERANCE * scale:
        logger.warning("imaginary residue %.3e at t=%g exceeds tolerance", residue, t)
    else:
        logger.debug("discarded imaginary residue %.3e at t=%g", residue, t)
    return Field(grid=grid, values=complex_values.real, spectrum=spectrum, t=t)


def solve_cauchy(
    time_kernel: TimeKernel,
    space_kernel: SpaceKernel,
    initial: Field,
    times: Sequence[float],
    strict: bool = False,
) -> List[Field]:
    """
    Solve the Cauchy problem at each requested time.

    Args:
        initial: initial density f on a Grid
        times: nondecreasing times t >= 0
        strict: raise instead of warning when the solution reaches the
            window boundary

    Raises:
        DomainError: if the times are negative or unsorted
        BoundaryMassError: in strict mode, if the density at the boundary
            exceeds 1e-6 at some output time
    """
    times = [float(t) for t in times]
    if any(t < 0 for t in times) or any(b < a for a, b in zip(times, times[1:])):
        raise DomainError("times must be nonnegative and sorted")
    initial = initial.with_spectrum()
    grid = initial.grid
    if initial.boundary_density() > INITIAL_BOUNDARY_TOLERANCE:
        logger.warning("initial data is %.3e at the window boundary; widen the grid",
                       initial.boundary_density())

    solution = []
    for t in times:
        field = _to_field(grid, initial.spectrum * propagator(time_kernel, space_kernel, grid, t), t)
        edge = field.boundary_density()
        if edge > BOUNDARY_TOLERANCE:
            message = f"density {edge:.3e} at the window boundary at t={t:g}"
            if strict:
                raise BoundaryMassError(message)
            logger.warning(message)
        solution.append(field)
    return solution


def apply_generalized_laplacian(field: Field, space_kernel: SpaceKernel) -> Field:
    """D_(k) applied spectrally: multiply by -zeta(xi) and transform back."""
    field = field.with_spectrum()
    return _to_field(field.grid, -grid_symbol(space_kernel, field.grid) * field.spectrum, field.t)
