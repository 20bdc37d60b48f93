"""
Uniform periodic grids on [-L, L) and sampled fields on them.

Spectral coefficients approximate the unitary Fourier transform

    p~(xi) = (2 pi)^{-1/2} integral p(x) e^{-i xi x} dx

at the DFT frequencies xi_m = pi m / L, so that discrete Plancherel holds
exactly: sum |p_i|^2 dx = sum |p~_m|^2 dxi.
"""
from functools import lru_cache
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field as PydanticField, field_validator, model_validator

SQRT_2PI = np.sqrt(2.0 * np.pi)
MIN_GRID_POINTS = 256


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.flags.writeable = False
    return array


@lru_cache(maxsize=64)
def _grid_arrays(half_width: float, points: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Read-only x, xi and the phase factor of the transform pair."""
    dx = 2.0 * half_width / points
    x = _frozen(-half_width + dx * np.arange(points))
    xi = _frozen(2.0 * np.pi * np.fft.fftfreq(points, d=dx))
    return x, xi, _frozen(np.exp(-1j * xi * x[0]))


class Grid(BaseModel):
    """N points x_i = -L + i dx on the periodic interval [-L, L)."""

    half_width: float = PydanticField(..., gt=0, description="L")
    points: int = PydanticField(..., ge=MIN_GRID_POINTS, description="N, a power of two")

    model_config = ConfigDict(frozen=True)

    @field_validator("points")
    @classmethod
    def power_of_two(cls, points: int) -> int:
        if points & (points - 1):
            raise ValueError(f"points must be a power of two, got {points}")
        return points

    @property
    def dx(self) -> float:
        return 2.0 * self.half_width / self.points

    @property
    def dxi(self) -> float:
        return np.pi / self.half_width

    # arrays live outside the model so that equal grids compare by (L, N) only
    @property
    def x(self) -> np.ndarray:
        return _grid_arrays(self.half_width, self.points)[0]

    @property
    def xi(self) -> np.ndarray:
        """Frequencies in numpy FFT order."""
        return _grid_arrays(self.half_width, self.points)[1]

    @property
    def phase(self) -> np.ndarray:
        return _grid_arrays(self.half_width, self.points)[2]

    def forward(self, values: np.ndarray) -> np.ndarray:
        """Spectral coefficients of samples (last axis runs over the grid)."""
        return self.dx / SQRT_2PI * self.phase * np.fft.fft(values, axis=-1)

    def inverse(self, spectrum: np.ndarray) -> np.ndarray:
        """Complex samples from spectral coefficients."""
        return np.fft.ifft(spectrum / self.phase, axis=-1) * SQRT_2PI / self.dx


class Field(BaseModel):
    """A real function sampled on a Grid at time t, with optional spectral coefficients."""

    grid: Grid
    values: np.ndarray
    spectrum: Optional[np.ndarray] = None
    t: float = PydanticField(0.0, ge=0)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("values", mode="before")
    @classmethod
    def real_values(cls, values) -> np.ndarray:
        return _frozen(np.asarray(values, dtype=float))

    @field_validator("spectrum", mode="before")
    @classmethod
    def complex_spectrum(cls, spectrum) -> Optional[np.ndarray]:
        return None if spectrum is None else _frozen(np.asarray(spectrum, dtype=complex))

    @model_validator(mode="after")
    def shapes_match(self) -> "Field":
        if self.values.shape != (self.grid.points,):
            raise ValueError(f"expected {self.grid.points} values, got shape {self.values.shape}")
        if self.spectrum is not None and self.spectrum.shape != self.values.shape:
            raise ValueError("spectrum and values must have the same shape")
        return self

    @classmethod
    def from_function(cls, grid: Grid, function, t: float = 0.0) -> "Field":
        return cls(grid=grid, values=function(grid.x), t=t).with_spectrum()

    def with_spectrum(self) -> "Field":
        if self.spectrum is not None:
            return self
        return self.model_copy(update={"spectrum": _frozen(self.grid.forward(self.values))})

    def mass(self) -> float:
        return float(np.sum(self.values) * self.grid.dx)

    def boundary_density(self) -> float:
        """Largest |p| at the two ends of the periodic window."""
        return float(max(abs(self.values[0]), abs(self.values[-1])))


def gaussian(grid: Grid, center: float = 0.0, sigma: float = 1.0) -> Field:
    """Normalized Gaussian density."""
    return Field.from_function(
        grid, lambda x: np.exp(-0.5 * ((x - center) / sigma) ** 2) / (sigma * SQRT_2PI))


def box(grid: Grid, a: float, b: float) -> Field:
    """Indicator of [a, b] scaled to unit mass."""
    return Field.from_function(grid, lambda x: np.where((x >= a) & (x <= b), 1.0 / (b - a), 0.0))
