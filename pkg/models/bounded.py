"""
Models of the bounded-domain problem on B = (-H, H).
"""
import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from models.kernel import SpaceKernel


class TruncatedKernel(BaseModel):
    """
    k*(x) = k(x) for 0 < |x| <= 2H and theta |x|^{-(1+2beta)} beyond.

    Jumps longer than 2H leave B from every starting point, so the kernel
    outside [-2H, 2H] does not change the bounded-domain problem.
    """

    base: SpaceKernel
    half_width: float = Field(1.0, gt=0, description="H")
    theta: float = Field(..., gt=0)
    beta: float = Field(..., gt=0, lt=1)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def horizon(self) -> float:
        return 2.0 * self.half_width


class EigenSystem(BaseModel):
    """
    Eigenpairs of the discrete operator on M interior points x_i = -H + i dx.

    Eigenvectors are the columns of `vectors`, orthonormal for the inner
    product sum_i u_i v_i dx.
    """

    half_width: float
    x: np.ndarray
    dx: float
    matrix: np.ndarray
    eigenvalues: np.ndarray
    vectors: np.ndarray
    symmetry_defect: float = 0.0

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def size(self) -> int:
        return len(self.x)

    def coefficients(self, values: np.ndarray) -> np.ndarray:
        """<psi_j, u> for every mode j."""
        return self.vectors.T @ np.asarray(values, dtype=float) * self.dx


class DomainField(BaseModel):
    """Solution on the interior grid of B at time t with its mode amplitudes omega_j(t)."""

    x: np.ndarray
    dx: float
    t: float = Field(0.0, ge=0)
    values: np.ndarray
    modes: np.ndarray

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
