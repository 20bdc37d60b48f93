"""
Monte Carlo ensembles of the uncoupled continuous-time random walk.

Walkers are simulated in fixed blocks of 4096. Block b draws from a Philox
generator keyed by SeedSequence([seed, b]), so the positions depend on
(seed, P) only and not on the number of worker threads.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence

import numpy as np

from ctrw.samplers import build_jump_sampler, build_waiting_sampler, draw_jumps, draw_waiting_times
from exceptions import DomainError
from models.ensemble import EnsembleResult, SamplerTable, Trajectory
from models.kernel import SpaceKernel, TimeKernel

logger = logging.getLogger(__name__)

BLOCK_SIZE = 4096
MIN_PARTICLES = 1000
TRAJECTORY_LIMIT = 100


def block_generator(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, block])))


def _run_block(
    waiting: SamplerTable,
    jumps: SamplerTable,
    times: np.ndarray,
    size: int,
    rng: np.random.Generator,
    record: bool,
) -> tuple[np.ndarray, List[Trajectory] | None]:
    clock = np.zeros(size)
    position = np.zeros(size)
    next_time = np.zeros(size, dtype=int)
    out = np.zeros((size, len(times)))
    history: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []

    active = np.arange(size)
    while active.size:
        epoch = clock[active] + draw_waiting_times(waiting, rng, active.size)
        reached = np.searchsorted(times, epoch, side="left")
        # observation times before the renewal see the old position
        for j in range(len(times)):
            hit = (next_time[active] <= j) & (j < reached)
            out[active[hit], j] = position[active[hit]]
        next_time[active] = reached
        position[active] += draw_jumps(jumps, rng, active.size)
        clock[active] = epoch
        if record:
            history.append((active.copy(), epoch, position[active].copy()))
        active = active[reached < len(times)]

    if not record:
        return out, None
    trajectories = []
    for particle in range(size):
        epochs, positions = [], []
        for walkers, epoch, reached_position in history:
            row = np.flatnonzero(walkers == particle)
            if row.size:
                epochs.append(epoch[row[0]])
                positions.append(reached_position[row[0]])
        trajectories.append(Trajectory(epochs=np.array(epochs), positions=np.array(positions)))
    return out, trajectories


def simulate_ensemble(
    time_kernel: TimeKernel,
    space_kernel: SpaceKernel,
    particles: int,
    times: Sequence[float],
    seed: int,
    scale: float = 1.0,
    threads: int = 1,
    keep_trajectories: bool = False,
) -> EnsembleResult:
    """
    Positions of `particles` walkers at each observation time.

    Args:
        scale: diffusive-limit scale eps of the waiting and jump laws
        threads: worker threads; does not change the result
        keep_trajectories: store renewal epochs and positions per walker
            (at most 100 walkers)

    Raises:
        DomainError: for fewer than 1000 walkers (unless trajectories are
            kept) or times that are not positive and ascending
    """
    times_arr = np.asarray(times, dtype=float)
    if times_arr.ndim != 1 or times_arr.size == 0 or np.any(times_arr <= 0) or np.any(np.diff(times_arr) < 0):
        raise DomainError("observation times must be positive and ascending")
    if keep_trajectories:
        if particles > TRAJECTORY_LIMIT:
            raise DomainError(f"trajectories are kept for at most {TRAJECTORY_LIMIT} walkers")
    elif particles < MIN_PARTICLES:
        raise DomainError(f"need at least {MIN_PARTICLES} walkers, got {particles}")

    waiting = build_waiting_sampler(time_kernel, scale)
    jumps = build_jump_sampler(space_kernel, scale)
    sizes = [min(BLOCK_SIZE, particles - start) for start in range(0, particles, BLOCK_SIZE)]

    def run(block: int):
        return _run_block(waiting, jumps, times_arr, sizes[block], block_generator(seed, block), keep_trajectories)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(run, range(len(sizes))))
    logger.info("simulated %d walkers in %d blocks to t=%g", particles, len(sizes), times_arr[-1])

    trajectories = None
    if keep_trajectories:
        trajectories = [trajectory for _, block in results for trajectory in block]
    return EnsembleResult(
        particles=particles,
        times=times_arr,
        positions=np.concatenate([positions for positions, _ in results], axis=0),
        seed=seed,
        block_size=BLOCK_SIZE,
        scale=scale,
        trajectories=trajectories,
    )
