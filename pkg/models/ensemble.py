"""
Models of the random-walk engine: sampler tables, ensembles and their statistics.
"""
from enum import Enum
from typing import List, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.kernel import SpaceKernel, TimeKernel

ENDPOINT_TOLERANCE = 1e-6


class SamplerMethod(str, Enum):
    CLOSED_FORM = "closed-form"
    TRANSFORM_INVERTED = "transform-inverted"


class SamplerTable(BaseModel):
    """
    Inverse-CDF sampler of a waiting-time or jump law.

    Closed-form samplers carry no table. Tabulated waiting times continue
    beyond the last abscissa with a power-law survival of exponent
    `tail_exponent`.
    """

    source: Union[TimeKernel, SpaceKernel]
    method: SamplerMethod
    scale: float = Field(1.0, gt=0, description="Diffusive-limit scale epsilon")
    abscissae: Optional[np.ndarray] = None
    cdf: Optional[np.ndarray] = None
    tail_exponent: Optional[float] = None
    clip_mass: float = 0.0

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def table_is_monotone(self) -> "SamplerTable":
        if self.method is SamplerMethod.CLOSED_FORM:
            return self
        if self.abscissae is None or self.cdf is None or len(self.cdf) != len(self.abscissae):
            raise ValueError("tabulated samplers need abscissae and cdf of equal length")
        if np.any(np.diff(self.cdf) <= 0) or np.any(np.diff(self.abscissae) <= 0):
            raise ValueError("cdf and abscissae must be strictly increasing")
        if self.cdf[0] < -ENDPOINT_TOLERANCE or self.cdf[0] > ENDPOINT_TOLERANCE:
            raise ValueError(f"cdf starts at {self.cdf[0]:g}, expected 0")
        if self.tail_exponent is None and abs(self.cdf[-1] - 1.0) > ENDPOINT_TOLERANCE:
            raise ValueError(f"cdf ends at {self.cdf[-1]:g}, expected 1")
        return self


class Trajectory(BaseModel):
    """Renewal epochs and the positions reached at them, for one particle."""

    epochs: np.ndarray
    positions: np.ndarray

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def position_at(self, t: float) -> float:
        """Sum of the jumps whose epoch is <= t."""
        index = int(np.searchsorted(self.epochs, t, side="right"))
        return 0.0 if index == 0 else float(self.positions[index - 1])


class EnsembleResult(BaseModel):
    """Positions of P independent walkers (rows) at the observation times (columns)."""

    particles: int = Field(..., ge=1)
    times: np.ndarray
    positions: np.ndarray
    seed: int
    block_size: int
    scale: float = 1.0
    trajectories: Optional[List[Trajectory]] = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def msd(self) -> np.ndarray:
        return np.mean(self.positions ** 2, axis=0)


class EnsembleStatistics(BaseModel):
    """Empirical MSD, density histograms and characteristic function of an ensemble."""

    times: np.ndarray
    msd: np.ndarray
    bin_edges: np.ndarray
    histograms: np.ndarray = Field(..., description="One density row per observation time")
    xi: np.ndarray
    ecf: np.ndarray = Field(..., description="Complex ECF, shape (times, xi)")
    ecf_stderr: np.ndarray = Field(..., description="Standard error of the real part")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def bin_centers(self) -> np.ndarray:
        return 0.5 * (self.bin_edges[1:] + self.bin_edges[:-1])
