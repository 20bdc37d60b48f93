"""
Kernel models for the nonlocal diffusion toolkit.

Time kernels describe the memory kernel g of the general Caputo-type
derivative through its Laplace transform. Space kernels describe the jump
intensity k of the general Laplacian through its symbol. All models are
frozen: they are hashable, safe to share, and usable as cache keys.
"""
from typing import Annotated, Any, Callable, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Order = Annotated[float, Field(gt=0, lt=1)]
Positive = Annotated[float, Field(gt=0)]


def _check_strictly_decreasing(orders: Tuple[float, ...]) -> Tuple[float, ...]:
    if any(later >= earlier for earlier, later in zip(orders, orders[1:])):
        raise ValueError("orders must be strictly decreasing")
    return orders


class CaputoKernel(BaseModel):
    """Single-term Caputo kernel g(t) = t^{-alpha}/Gamma(1-alpha)."""

    variant: Literal["caputo"] = "caputo"
    alpha: Order = Field(..., description="Order of the time derivative")

    model_config = ConfigDict(frozen=True)


class MultiTermCaputoKernel(BaseModel):
    """Sum of Caputo kernels with positive weights and decreasing orders."""

    variant: Literal["multi_term_caputo"] = "multi_term_caputo"
    coefficients: Tuple[Positive, ...] = Field(..., min_length=1, max_length=8)
    orders: Tuple[Order, ...] = Field(..., min_length=1, max_length=8)

    model_config = ConfigDict(frozen=True)

    @field_validator("orders")
    @classmethod
    def orders_decrease(cls, orders: Tuple[float, ...]) -> Tuple[float, ...]:
        return _check_strictly_decreasing(orders)

    @model_validator(mode="after")
    def lengths_match(self) -> "MultiTermCaputoKernel":
        if len(self.coefficients) != len(self.orders):
            raise ValueError("coefficients and orders must have the same length")
        return self


class TemperedCaputoKernel(BaseModel):
    """Exponentially tempered Caputo kernel g(t) = e^{-bt} t^{-alpha}/Gamma(1-alpha)."""

    variant: Literal["tempered_caputo"] = "tempered_caputo"
    alpha: Order
    rate: float = Field(0.0, ge=0, description="Tempering rate b (1/time)")

    model_config = ConfigDict(frozen=True)


class CustomLaplaceKernel(BaseModel):
    """
    Time kernel given only through its Laplace transform.

    The callable must accept numpy arrays; complex arrays are passed by the
    Talbot inversion, real arrays by everything else.
    """

    variant: Literal["custom_laplace"] = "custom_laplace"
    laplace: Callable[[Any], Any]
    label: str = "custom"

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class RieszKernel(BaseModel):
    """
    Power-law kernel of the fractional Laplacian.

    Without an explicit normalization the kernel is scaled so that its symbol
    is exactly |xi|^{2 beta}.
    """

    variant: Literal["riesz"] = "riesz"
    beta: Order
    normalization: float | None = Field(None, gt=0, description="c in k = |x|^{-(1+2beta)}/c")
    dimension: Literal[1] = 1

    model_config = ConfigDict(frozen=True)


class MultiTermRieszKernel(BaseModel):
    """Weighted sum of normalized Riesz kernels; symbol sum_j b_j |xi|^{2 beta_j}."""

    variant: Literal["multi_term_riesz"] = "multi_term_riesz"
    weights: Tuple[Positive, ...] = Field(..., min_length=1, max_length=8)
    orders: Tuple[Order, ...] = Field(..., min_length=1, max_length=8)
    dimension: Literal[1] = 1

    model_config = ConfigDict(frozen=True)

    @field_validator("orders")
    @classmethod
    def orders_decrease(cls, orders: Tuple[float, ...]) -> Tuple[float, ...]:
        return _check_strictly_decreasing(orders)

    @model_validator(mode="after")
    def lengths_match(self) -> "MultiTermRieszKernel":
        if len(self.weights) != len(self.orders):
            raise ValueError("weights and orders must have the same length")
        return self


class TemperedRieszKernel(BaseModel):
    """Exponentially truncated kernel q |x|^{-(1+2beta)} e^{-h|x|}."""

    variant: Literal["tempered_riesz"] = "tempered_riesz"
    amplitude: Positive = Field(..., description="q")
    beta: Order
    truncation: Positive = Field(..., description="Truncation rate h (1/length)")
    dimension: Literal[1] = 1

    model_config = ConfigDict(frozen=True)


class CustomSpaceKernel(BaseModel):
    """
    Jump kernel given pointwise. The callable must be even, positive and
    vectorized over numpy arrays.
    """

    variant: Literal["custom_kernel"] = "custom_kernel"
    function: Callable[[Any], Any]
    finite_second_moment: bool = Field(
        True, description="Whether y^2 k(y) is integrable at infinity")
    label: str = "custom"
    dimension: Literal[1] = 1

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


TimeKernel = Union[CaputoKernel, MultiTermCaputoKernel, TemperedCaputoKernel, CustomLaplaceKernel]
SpaceKernel = Union[RieszKernel, MultiTermRieszKernel, TemperedRieszKernel, CustomSpaceKernel]

# Variants that can be written in a configuration file
ConfigTimeKernel = Annotated[
    Union[CaputoKernel, MultiTermCaputoKernel, TemperedCaputoKernel],
    Field(discriminator="variant"),
]
ConfigSpaceKernel = Annotated[
    Union[RieszKernel, MultiTermRieszKernel, TemperedRieszKernel],
    Field(discriminator="variant"),
]


class Divergent(BaseModel):
    """Typed outcome for quantities that are infinite for a kernel (not a failure)."""

    reason: str

    model_config = ConfigDict(frozen=True)


def kernel_descriptor(kernel: BaseModel) -> str:
    """Compact one-line description used in CSV provenance headers."""
    return kernel.model_dump_json(exclude={"laplace", "function"})
