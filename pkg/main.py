"""
Command-line entry point of the nonlocal diffusion toolkit.

    python main.py --config run.yaml --out results solve-cauchy
"""
import logging

import click

from commands import check_kernels, msd, simulate, solve_cauchy, solve_ibvp
from commands.common import RunOptions
from settings import settings


def configure_logging(level: str | None = None) -> None:
    logging.basicConfig(level=(level or settings.LOG_LEVEL).upper(), format=settings.LOG_FORMAT, force=True)


@click.group()
@click.option("--config", "config", type=click.Path(dir_okay=False), help="YAML run configuration.")
@click.option("--out", "out", type=click.Path(file_okay=False), default=None,
              help="Output directory (defaults to OUTPUT_DIR).")
@click.option("--threads", type=click.IntRange(min=1), default=settings.THREADS, show_default=True,
              help="Worker threads for the random walk.")
@click.option("--strict", is_flag=True, help="Turn warnings into errors.")
@click.option("--log-level", default=None, help="Override LOG_LEVEL.")
@click.pass_context
def cli(ctx: click.Context, config, out, threads, strict, log_level) -> None:
    """Nonlocal diffusion solvers and random-walk simulator."""
    configure_logging(log_level)
    ctx.obj = RunOptions(config=config, out=out, threads=threads, strict=strict)


cli.add_command(solve_cauchy.solve_cauchy_command)
cli.add_command(solve_ibvp.solve_ibvp_command)
cli.add_command(simulate.simulate_command)
cli.add_command(msd.msd_command)
cli.add_command(check_kernels.check_kernels_command)


if __name__ == "__main__":
    cli()
