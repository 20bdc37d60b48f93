"""
Parameter models for the Mittag-Leffler family.
"""
from typing import Annotated, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

MAX_DERIVATIVE_ORDER = 64
MAX_SHELLS = 400


class MLParams(BaseModel):
    """Parameters of E^{(j)}_{alpha, beta}."""

    alpha: float = Field(..., gt=0, le=1)
    beta: float = Field(..., gt=0)
    derivative: int = Field(0, ge=0, le=MAX_DERIVATIVE_ORDER)

    model_config = ConfigDict(frozen=True)


class MultiMLParams(BaseModel):
    """Exponents, second parameter and arguments of the multivariate Mittag-Leffler function."""

    exponents: Tuple[Annotated[float, Field(gt=0)], ...] = Field(..., min_length=1, max_length=8)
    b: float = Field(..., gt=0)
    arguments: Tuple[float, ...] = Field(..., min_length=1, max_length=8)
    max_shells: int = Field(MAX_SHELLS, ge=1, le=MAX_SHELLS)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def lengths_match(self) -> "MultiMLParams":
        if len(self.exponents) != len(self.arguments):
            raise ValueError("exponents and arguments must have the same length")
        return self
