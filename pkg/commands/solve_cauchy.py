"""
solve-cauchy: fields on the line at the requested times plus the estimate report.
"""
import click

from cauchy.estimates import verify_cauchy_estimates
from cauchy.solver import solve_cauchy
from commands.common import EXIT_CHECKS_FAILED, EXIT_OK, RunOptions, initial_values, provenance, run_command
from models.config import RunConfig
from models.field import Field
from storage.csv_store import write_field_csv, write_report_json


def run_solve_cauchy(config: RunConfig, options: RunOptions) -> int:
    grid = config.grid
    initial = Field(grid=grid, values=initial_values(config, grid.x)).with_spectrum()
    solution = solve_cauchy(config.time_kernel, config.space_kernel, initial, config.times, strict=options.strict)
    header = provenance(config)
    for field in solution:
        write_field_csv(f"p_t{field.t:g}.csv", field, header=header)
    if not config.checks:
        return EXIT_OK
    report = verify_cauchy_estimates(solution, initial, config.time_kernel, config.space_kernel)
    write_report_json("report.json", report)
    return EXIT_OK if report.passed else EXIT_CHECKS_FAILED


@click.command("solve-cauchy")
@click.pass_context
def solve_cauchy_command(ctx: click.Context) -> None:
    """Solve the Cauchy problem on a periodic window [-L, L)."""
    run_command(ctx, "cauchy", run_solve_cauchy)
