"""
Norms of grid fields: L^2 and the general Sobolev norm ||(1 + zeta) F u||_{L^2}.
"""
import numpy as np

from cauchy.solver import grid_symbol
from models.field import Field
from models.kernel import SpaceKernel


def norm_l2(field: Field) -> float:
    return float(np.sqrt(np.sum(field.values ** 2) * field.grid.dx))


def norm_l2_spectral(field: Field) -> float:
    field = field.with_spectrum()
    return float(np.sqrt(np.sum(np.abs(field.spectrum) ** 2) * field.grid.dxi))


def weighted_norm(spectrum: np.ndarray, symbol: np.ndarray, dxi: float) -> float:
    """sqrt(sum |(1 + symbol) spectrum|^2 dxi)."""
    return float(np.sqrt(np.sum(np.abs((1.0 + symbol) * spectrum) ** 2) * dxi))


def norm_mk(field: Field, space_kernel: SpaceKernel) -> float:
    field = field.with_spectrum()
    return weighted_norm(field.spectrum, grid_symbol(space_kernel, field.grid), field.grid.dxi)
