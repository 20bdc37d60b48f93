"""
simulate: random-walk ensemble, its MSD, histograms and characteristic
function, optionally compared with the Cauchy solver.
"""
import click
import numpy as np

from cauchy.solver import solve_cauchy
from commands.common import EXIT_CHECKS_FAILED, EXIT_OK, RunOptions, provenance, run_command
from ctrw.ensemble import simulate_ensemble
from ctrw.statistics import empirical_statistics, l1_distance, pde_target, propagator_target
from models.config import RunConfig
from models.field import gaussian
from models.kernel import Divergent
from models.report import PropertyReport
from relaxation.msd import msd
from storage.csv_store import write_report_json, write_table

ECF_SIGMAS = 3.0
L1_THRESHOLD = 0.05
# the walk matches the equation only in the long-time regime
COMPARISON_START = 1.0


def run_simulate(config: RunConfig, options: RunOptions) -> int:
    mc = config.mc
    result = simulate_ensemble(config.time_kernel, config.space_kernel, mc.particles, config.times, mc.seed,
                               scale=mc.scale, threads=options.threads)
    stats = empirical_statistics(result, bins=mc.bins, hist_range=mc.hist_range, xi=mc.xi)
    header = provenance(config) + [f"particles: {mc.particles}", f"seed: {mc.seed}", f"scale: {mc.scale!r}"]

    analytic = msd(config.time_kernel, config.space_kernel, stats.times)
    if isinstance(analytic, Divergent):
        write_table("msd.csv", ["t", "msd_empirical", "msd_analytic"],
                    np.column_stack([stats.times, stats.msd, np.full_like(stats.msd, np.inf)]),
                    header=header + [f"msd_analytic: divergent ({analytic.reason})"])
    else:
        write_table("msd.csv", ["t", "msd_empirical", "msd_analytic"],
                    np.column_stack([stats.times, stats.msd, analytic]), header=header)

    centers = stats.bin_centers
    for j, t in enumerate(stats.times):
        write_table(f"hist_t{t:g}.csv", ["bin_center", "density"], np.column_stack([centers, stats.histograms[j]]),
                    header=header + [f"t: {t!r}"])

    report = PropertyReport(subject="mc")
    rows = []
    for j, t in enumerate(stats.times):
        target = np.asarray(propagator_target(config.time_kernel, config.space_kernel, stats.xi, t, mc.scale))
        limit = np.asarray(pde_target(config.time_kernel, config.space_kernel, stats.xi, t))
        for m, xi in enumerate(stats.xi):
            ecf = stats.ecf[j, m]
            rows.append((t, xi, ecf.real, ecf.imag, stats.ecf_stderr[j, m], target[m], limit[m]))
            report.add(f"ecf_t{t:g}_xi{xi:g}", ECF_SIGMAS * stats.ecf_stderr[j, m] - abs(ecf.real - target[m]),
                       detail="within 3 standard errors of the exact walk target")
    write_table("ecf.csv", ["t", "xi", "re_ecf", "im_ecf", "stderr", "target", "pde_target"], rows, header=header)

    if mc.compare_pde:
        grid = config.grid
        initial = gaussian(grid, 0.0, 2.0 * grid.dx)
        fields = solve_cauchy(config.time_kernel, config.space_kernel, initial, stats.times)
        for j, field in enumerate(fields):
            distance = l1_distance(stats.bin_edges, stats.histograms[j], field)
            name = f"l1_distance_t{field.t:g}"
            if field.t >= COMPARISON_START:
                report.add(name, L1_THRESHOLD - distance, detail=f"L1 distance {distance:.4f}")
            else:
                report.skip(name, f"L1 distance {distance:.4f}; short times are outside the diffusive regime")

    if not config.checks:
        return EXIT_OK
    write_report_json("report.json", report)
    return EXIT_OK if report.passed else EXIT_CHECKS_FAILED


@click.command("simulate")
@click.pass_context
def simulate_command(ctx: click.Context) -> None:
    """Simulate the random walk and write its statistics."""
    run_command(ctx, "mc", run_simulate)
