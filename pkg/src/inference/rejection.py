"""Vanilla rejection ABC."""

import time

import numpy as np
from loguru import logger

from src.errors import BudgetExhaustedError, InvalidArgumentError
from src.inference.base import BasePrior, BaseSimulator, Discrepancy
from src.inference.streams import BatchRunner, proposal_streams
from src.models.inference import AbcConfig, RejectionResult
from src.models.measure import EmpiricalMeasure


def _result(
    thetas: list[np.ndarray], distances: list[float], proposals: int, exhausted: bool, dim: int
) -> RejectionResult:
    samples = np.stack(thetas) if thetas else np.empty((0, dim))
    return RejectionResult(
        samples=samples,
        distances=np.asarray(distances, dtype=np.float64),
        num_proposals=proposals,
        budget_exhausted=exhausted,
    )


def rejection_abc(
    prior: BasePrior,
    sim: BaseSimulator,
    observed: EmpiricalMeasure,
    disc: Discrepancy,
    cfg: AbcConfig,
) -> RejectionResult:
    """
    Draw T = cfg.num_particles samples from the ABC posterior.

    Each proposal draws theta from the prior, simulates m synthetic points and
    is accepted when disc(observed, synthetic) <= epsilon. Proposals are
    evaluated in parallel batches but accepted in index order, so the result
    does not depend on the number of workers.

    Args:
        prior: Prior distribution
        sim: Simulator
        observed: Observed dataset
        disc: Discrepancy between observed and synthetic data
        cfg: Sampler configuration; cfg.epsilon is required

    Returns:
        RejectionResult with exactly T samples

    Raises:
        InvalidArgumentError: epsilon missing or not positive, or neither a
            simulation nor a time budget set
        BudgetExhaustedError: the simulation or time budget ran out first;
            ``partial`` holds the samples accepted so far
    """
    epsilon = cfg.epsilon
    if epsilon is None or not epsilon > 0:
        raise InvalidArgumentError(f"rejection ABC needs epsilon > 0, got {epsilon}")
    if cfg.max_total_simulations is None and cfg.time_budget_seconds is None:
        # max_generations does not bound a single rejection pass
        raise InvalidArgumentError(
            "rejection ABC needs max_total_simulations or time_budget_seconds"
        )

    m = cfg.synthetic_size or observed.n
    target = cfg.num_particles
    cap = cfg.max_total_simulations

    def propose(index: int) -> tuple[np.ndarray, float]:
        rng, sim_seed = proposal_streams(cfg.seed, 0, index)
        theta = prior.sample(rng)
        synthetic = sim.generate(theta, m, sim_seed)
        return theta, float(disc(observed, synthetic))

    thetas: list[np.ndarray] = []
    distances: list[float] = []
    consumed = 0
    next_index = 0
    start = time.perf_counter()

    with BatchRunner(cfg.workers) as runner:
        while len(thetas) < target:
            size = cfg.batch_size if cap is None else min(cfg.batch_size, cap - next_index)
            elapsed = time.perf_counter() - start
            over_time = cfg.time_budget_seconds is not None and elapsed >= cfg.time_budget_seconds
            if size <= 0 or over_time:
                partial = _result(thetas, distances, consumed, True, prior.dim)
                logger.debug(
                    f"Rejection ABC budget exhausted: {len(thetas)}/{target} accepted "
                    f"after {consumed} proposals"
                )
                raise BudgetExhaustedError(
                    f"accepted {len(thetas)} of {target} samples before the budget ran out",
                    partial=partial,
                )

            batch = runner.map(propose, range(next_index, next_index + size))
            next_index += size
            for theta, distance in batch:
                consumed += 1
                if distance <= epsilon:
                    thetas.append(theta)
                    distances.append(distance)
                    if len(thetas) == target:
                        break
            logger.debug(f"Rejection ABC: {len(thetas)}/{target} accepted, {consumed} proposals")

    result = _result(thetas, distances, consumed, False, prior.dim)
    logger.debug(
        f"Rejection ABC accepted {target} samples in {consumed} proposals "
        f"(rate {result.acceptance_rate:.4f}, eps={epsilon:g})"
    )
    return result
