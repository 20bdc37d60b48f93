"""
msd: the analytic mean squared displacement curve.
"""
import click
import numpy as np

from commands.common import EXIT_OK, RunOptions, provenance, run_command
from models.config import RunConfig
from models.kernel import Divergent
from relaxation.msd import msd, msd_loglog_slope
from storage.csv_store import write_table


def run_msd(config: RunConfig, options: RunOptions) -> int:
    times = np.asarray(config.times, dtype=float)
    values = msd(config.time_kernel, config.space_kernel, times)
    if isinstance(values, Divergent):
        write_table("msd_analytic.csv", ["t", "msd"], [],
                    header=provenance(config) + [f"msd: divergent ({values.reason})"])
        return EXIT_OK
    header = provenance(config)
    if len(times) > 1:
        header.append(f"loglog_slope: {msd_loglog_slope(times, values)!r}")
    write_table("msd_analytic.csv", ["t", "msd"], np.column_stack([times, values]), header=header)
    return EXIT_OK


@click.command("msd")
@click.pass_context
def msd_command(ctx: click.Context) -> None:
    """Write the analytic MSD, or a divergence marker for heavy-tailed jumps."""
    run_command(ctx, "msd", run_msd)
