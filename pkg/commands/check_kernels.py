"""
check-kernels: numeric spot checks of the structural kernel conditions.
"""
import click

from commands.common import EXIT_CHECKS_FAILED, EXIT_OK, RunOptions, run_command
from kernels.conditions import check_conditions
from models.config import RunConfig
from storage.csv_store import write_json


def run_check_kernels(config: RunConfig, options: RunOptions) -> int:
    reports = {
        section: check_conditions(kernel)
        for section, kernel in (("time_kernel", config.time_kernel), ("space_kernel", config.space_kernel))
        if kernel is not None
    }
    write_json("report.json", {section: report.summary() for section, report in reports.items()})
    return EXIT_OK if all(report.passed for report in reports.values()) else EXIT_CHECKS_FAILED


@click.command("check-kernels")
@click.pass_context
def check_kernels_command(ctx: click.Context) -> None:
    """Check the configured kernels against their structural conditions."""
    run_command(ctx, "kernels", run_check_kernels)
