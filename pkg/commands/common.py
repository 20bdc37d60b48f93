"""
Shared plumbing of the subcommands: options, config loading, output store,
strict mode and the mapping from outcomes to exit codes.
"""
import logging
from typing import Callable, Optional

import click
import numpy as np
from pydantic import BaseModel

from exceptions import ConfigError, NonlocalDiffusionError, StrictModeError
from models.config import BoxInitial, FileInitial, GaussianInitial, RunConfig, load_run_config
from models.kernel import kernel_descriptor
from settings import settings
from storage.csv_store import close_output_store, open_output_store

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_INVALID_CONFIG = 2
EXIT_FAILURE = 3
EXIT_INTERNAL_ERROR = 4


class RunOptions(BaseModel):
    """Global command-line options."""

    config: Optional[str] = None
    out: Optional[str] = None
    threads: int = settings.THREADS
    strict: bool = False


class StrictHandler(logging.Handler):
    """Turns every warning record into a StrictModeError; errors pass through."""

    def __init__(self):
        super().__init__(level=logging.WARNING)

    def emit(self, record: logging.LogRecord) -> None:
        if record.levelno == logging.WARNING:
            raise StrictModeError(record.getMessage())


def provenance(config: RunConfig) -> list[str]:
    lines = []
    if config.time_kernel is not None:
        lines.append(f"time_kernel: {kernel_descriptor(config.time_kernel)}")
    if config.space_kernel is not None:
        lines.append(f"space_kernel: {kernel_descriptor(config.space_kernel)}")
    return lines


def initial_values(config: RunConfig, x: np.ndarray) -> np.ndarray:
    """Sample the configured initial condition (except eigenmodes) at the points x."""
    initial = config.initial
    if isinstance(initial, GaussianInitial):
        return np.exp(-0.5 * ((x - initial.center) / initial.sigma) ** 2) / (initial.sigma * np.sqrt(2.0 * np.pi))
    if isinstance(initial, BoxInitial):
        return np.where((x >= initial.a) & (x <= initial.b), 1.0 / (initial.b - initial.a), 0.0)
    if isinstance(initial, FileInitial):
        try:
            data = np.loadtxt(initial.path, delimiter=",", comments="#", ndmin=2)
        except OSError as exc:
            raise ConfigError(f"initial.path: cannot read {initial.path}: {exc}") from exc
        if data.shape[1] < 2:
            raise ConfigError(f"initial.path: {initial.path} needs columns x, p")
        order = np.argsort(data[:, 0])
        return np.interp(x, data[order, 0], data[order, 1], left=0.0, right=0.0)
    raise ConfigError(f"initial.kind: {initial.kind} is not available for this target")


def run_command(ctx: click.Context, target: str, runner: Callable[[RunConfig, RunOptions], int]) -> None:
    """Load the configuration, run the command in an open output store and exit with its code."""
    options: RunOptions = ctx.obj
    if options.config is None:
        click.echo("error: --config is required", err=True)
        ctx.exit(EXIT_INVALID_CONFIG)

    strict = StrictHandler() if options.strict else None
    if strict is not None:
        logging.getLogger().addHandler(strict)
    try:
        config = load_run_config(options.config, target)
        open_output_store(options.out)
        code = runner(config, options)
    except ConfigError as exc:
        click.echo(f"error: {exc}", err=True)
        code = EXIT_INVALID_CONFIG
    except NonlocalDiffusionError as exc:
        logger.debug("command %s failed", target, exc_info=True)
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        code = EXIT_FAILURE
    except Exception as exc:
        logger.exception("command %s failed unexpectedly", target)
        click.echo(f"internal error: {type(exc).__name__}: {exc}", err=True)
        code = EXIT_INTERNAL_ERROR
    finally:
        close_output_store()
        if strict is not None:
            logging.getLogger().removeHandler(strict)
    ctx.exit(code)
