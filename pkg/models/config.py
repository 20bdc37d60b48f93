"""
Run configuration models and the YAML loader used by the command line.

A configuration has one section per concern (time_kernel, space_kernel,
grid, ibvp, initial, times, mc, checks). The subcommand picks the target;
each target requires its own sections.
"""
from pathlib import Path
from typing import Annotated, List, Literal, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from yaml.nodes import MappingNode, SequenceNode

from exceptions import ConfigError
from models.field import Grid
from models.kernel import ConfigSpaceKernel, ConfigTimeKernel

Target = Literal["cauchy", "ibvp", "mc", "msd", "kernels"]

REQUIRED_SECTIONS = {
    "cauchy": ("time_kernel", "space_kernel", "grid", "initial", "times"),
    "ibvp": ("time_kernel", "space_kernel", "ibvp", "initial", "times"),
    "mc": ("time_kernel", "space_kernel", "mc", "times"),
    "msd": ("time_kernel", "space_kernel", "times"),
    "kernels": (),
}


class IbvpSection(BaseModel):
    """Bounded domain (-H, H) with M interior points and optional truncation parameters."""

    half_width: float = Field(..., gt=0, description="H")
    points: int = Field(..., ge=64, le=4096, description="M")
    theta: Optional[float] = Field(None, gt=0)
    beta: Optional[float] = Field(None, gt=0, lt=1)
    decay_factor: float = Field(0.5, gt=0, lt=1)

    model_config = ConfigDict(extra="forbid")


class GaussianInitial(BaseModel):
    kind: Literal["gaussian"]
    center: float = 0.0
    sigma: float = Field(1.0, gt=0)

    model_config = ConfigDict(extra="forbid")


class BoxInitial(BaseModel):
    kind: Literal["box"]
    a: float
    b: float

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def ordered(self) -> "BoxInitial":
        if self.b <= self.a:
            raise ValueError("box needs a < b")
        return self


class EigenmodeInitial(BaseModel):
    """The j-th eigenvector of the bounded-domain operator (1-based)."""

    kind: Literal["eigenmode"]
    j: int = Field(1, ge=1)

    model_config = ConfigDict(extra="forbid")


class FileInitial(BaseModel):
    """CSV with columns x, p, interpolated onto the solver grid (zero outside)."""

    kind: Literal["file"]
    path: str

    model_config = ConfigDict(extra="forbid")


InitialCondition = Annotated[
    Union[GaussianInitial, BoxInitial, EigenmodeInitial, FileInitial],
    Field(discriminator="kind"),
]


class MonteCarloSection(BaseModel):
    particles: int = Field(..., ge=1000)
    seed: int = Field(0, ge=0)
    scale: float = Field(1.0, gt=0, description="Diffusive-limit scale of the walk")
    compare_pde: bool = False
    bins: int = Field(401, ge=1)
    hist_range: Tuple[float, float] = (-20.0, 20.0)
    xi: List[float] = Field(default_factory=lambda: [0.5, 1.0, 2.0])

    model_config = ConfigDict(extra="forbid")

    @field_validator("hist_range")
    @classmethod
    def range_ordered(cls, value: Tuple[float, float]) -> Tuple[float, float]:
        if value[1] <= value[0]:
            raise ValueError("hist_range must be (low, high) with low < high")
        return value


class RunConfig(BaseModel):
    """A validated run configuration for one target."""

    target: Target
    time_kernel: Optional[ConfigTimeKernel] = None
    space_kernel: Optional[ConfigSpaceKernel] = None
    grid: Optional[Grid] = None
    ibvp: Optional[IbvpSection] = None
    initial: Optional[InitialCondition] = None
    times: List[float] = Field(default_factory=list)
    mc: Optional[MonteCarloSection] = None
    checks: bool = True

    model_config = ConfigDict(extra="forbid")

    @field_validator("times")
    @classmethod
    def times_ascending(cls, times: List[float]) -> List[float]:
        if any(t < 0 for t in times):
            raise ValueError("times must be nonnegative")
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("times must be strictly ascending")
        return times

    @model_validator(mode="after")
    def target_sections(self) -> "RunConfig":
        for section in REQUIRED_SECTIONS[self.target]:
            value = getattr(self, section)
            if value is None or (section == "times" and not value):
                raise ValueError(f"{section}: required for the {self.target} target")
        if self.target == "kernels" and self.time_kernel is None and self.space_kernel is None:
            raise ValueError("time_kernel/space_kernel: at least one kernel is required")
        if self.target in ("mc", "msd") and self.times and self.times[0] <= 0:
            raise ValueError(f"times: must be positive for the {self.target} target")
        if self.target == "mc" and self.mc.compare_pde and self.grid is None:
            raise ValueError("grid: required when mc.compare_pde is set")
        if self.target == "cauchy" and isinstance(self.initial, EigenmodeInitial):
            raise ValueError("initial.kind: eigenmode initial data needs the ibvp target")
        return self


def _locate(root, loc: tuple) -> tuple[str, Optional[int]]:
    """Dotted key and 1-based YAML line of a validation error location."""
    node, line, parts = root, None, []
    for position, part in enumerate(loc):
        if isinstance(node, MappingNode):
            match = next((value for key, value in node.value if key.value == str(part)), None)
            if match is None:
                if position == len(loc) - 1:
                    parts.append(str(part))
                continue
            node = match
        elif isinstance(node, SequenceNode) and isinstance(part, int) and part < len(node.value):
            node = node.value[part]
        else:
            continue
        parts.append(str(part))
        line = node.start_mark.line + 1
    return ".".join(parts), line


def _describe(error: dict, root) -> str:
    key, line = _locate(root, error["loc"]) if root is not None else (".".join(map(str, error["loc"])), None)
    message = error["msg"].removeprefix("Value error, ")
    where = f" (line {line})" if line is not None else ""
    return f"{key}: {message}{where}" if key else f"{message}{where}"


def parse_run_config(text: str, target: str, source: str = "<config>") -> RunConfig:
    """
    Validate YAML text for a target.

    Raises:
        ConfigError: for unreadable YAML or invalid content, one line per problem
    """
    try:
        data = yaml.safe_load(text) or {}
        root = yaml.compose(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"{source}: invalid YAML: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: expected a mapping of sections at the top level")
    try:
        return RunConfig.model_validate({**data, "target": target})
    except ValidationError as exc:
        lines = [_describe(error, root) for error in exc.errors()]
        raise ConfigError(f"{source}: invalid configuration\n  " + "\n  ".join(lines)) from exc


def load_run_config(path: str | Path, target: str) -> RunConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read configuration {path}: {exc}") from exc
    return parse_run_config(text, target, source=str(path))
