"""
Result models of the relaxation module.
"""
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class RelaxationMethod(str, Enum):
    CLOSED_FORM = "closed-form"
    SERIES = "series"
    INVERTED = "inverted"


class RelaxationCurve(BaseModel):
    """Samples Z(t_i, lambda) with their complete-monotonicity diagnostics."""

    kernel: object
    rate: float = Field(..., ge=0)
    times: np.ndarray
    values: np.ndarray
    method: RelaxationMethod
    value_at_zero: float = Field(..., description="Z evaluated at t = 1e-30")
    monotonicity_violation: float = Field(
        ..., description="Largest sign violation of the alternating differences up to order 3")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class SubordinationProfile(BaseModel):
    """The density tau -> phi(t, tau) sampled on [0, tau_max] at a fixed t."""

    t: float = Field(..., gt=0)
    tau: np.ndarray
    density: np.ndarray
    tau_max: float
    mass: float
    clip_mass: float = Field(..., description="Integral of the negative overshoot removed by clipping")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
