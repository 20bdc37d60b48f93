"""
solve-ibvp: fields on the bounded domain, the operator spectrum, the decay of
the leading mode and the estimate report.
"""
import click
import numpy as np

from commands.common import EXIT_CHECKS_FAILED, EXIT_OK, RunOptions, initial_values, provenance, run_command
from exceptions import ConfigError
from ibvp.eigen import eigensystem
from ibvp.estimates import verify_ibvp_estimates
from ibvp.solver import solve_ibvp
from ibvp.truncation import truncate_kernel
from models.config import EigenmodeInitial, RunConfig
from relaxation.relaxation_function import relaxation_z
from storage.csv_store import write_report_json, write_table


def run_solve_ibvp(config: RunConfig, options: RunOptions) -> int:
    section = config.ibvp
    truncated = truncate_kernel(config.space_kernel, section.half_width, section.theta, section.beta)
    eig = eigensystem(truncated, section.points)

    if isinstance(config.initial, EigenmodeInitial):
        mode = config.initial.j - 1
        if mode >= eig.size:
            raise ConfigError(f"initial.j: only {eig.size} modes exist")
        f = np.array(eig.vectors[:, mode])
    else:
        mode = 0
        f = initial_values(config, eig.x)

    solution = solve_ibvp(config.time_kernel, eig, f, config.times)
    header = provenance(config) + [
        f"half_width: {section.half_width!r}", f"points: {section.points}",
        f"theta: {truncated.theta!r}", f"beta: {truncated.beta!r}",
    ]
    for field in solution:
        write_table(f"p_t{field.t:g}.csv", ["x", "p"], np.column_stack([field.x, field.values]),
                    header=[f"t: {field.t!r}"] + header)
    write_table("eigenvalues.csv", ["j", "lambda_j"],
                np.column_stack([np.arange(1, eig.size + 1), eig.eigenvalues]), header=header)

    initial_amplitude = eig.coefficients(f)[mode]
    rate = eig.eigenvalues[mode]
    rows = [
        (p.t, p.modes[mode], p.modes[mode] / initial_amplitude if initial_amplitude else np.nan,
         relaxation_z(config.time_kernel, max(rate, 0.0), p.t))
        for p in solution
    ]
    write_table("decay.csv", ["t", "omega", "ratio", "relaxation"], rows,
                header=header + [f"mode: {mode + 1}", f"lambda: {rate!r}"])

    if not config.checks:
        return EXIT_OK
    report = verify_ibvp_estimates(solution, f, eig, config.time_kernel, decay_factor=section.decay_factor)
    write_report_json("report.json", report)
    return EXIT_OK if report.passed else EXIT_CHECKS_FAILED


@click.command("solve-ibvp")
@click.pass_context
def solve_ibvp_command(ctx: click.Context) -> None:
    """Solve the bounded-domain problem on (-H, H) by eigenfunction expansion."""
    run_command(ctx, "ibvp", run_solve_ibvp)
