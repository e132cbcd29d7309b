"""Adaptive sequential Monte Carlo ABC."""

import math
import time

import numpy as np
from loguru import logger
from scipy.linalg import solve_triangular
from scipy.special import logsumexp

from src.config.constants import SMC_DEGENERATE_KERNEL_VARIANCE
from src.errors import BudgetExhaustedError, InternalError, InvalidArgumentError
from src.inference.base import BasePrior, BaseSimulator, Discrepancy
from src.inference.streams import BatchRunner, proposal_streams
from src.models.inference import AbcConfig, Particle, Population, SmcResult, StopReason
from src.models.measure import EmpiricalMeasure

# (theta, distance or None when the perturbation left the prior support)
Proposal = tuple[np.ndarray, float | None]


def kernel_cholesky(thetas: np.ndarray, weights: np.ndarray, scale: float) -> np.ndarray:
    """
    Cholesky factor of the perturbation covariance.

    The covariance is scale times the weighted empirical covariance of the
    previous generation. Identical ancestors fall back to an isotropic kernel.

    Args:
        thetas: N x d_theta ancestor parameters
        weights: Normalized ancestor weights
        scale: Covariance multiplier

    Returns:
        Lower-triangular d_theta x d_theta factor
    """
    dim = thetas.shape[1]
    isotropic = math.sqrt(SMC_DEGENERATE_KERNEL_VARIANCE) * np.eye(dim)
    if np.all(thetas == thetas[0]):
        logger.warning("SMC ancestors are identical, using isotropic perturbation kernel")
        return isotropic
    cov = scale * np.atleast_2d(np.cov(thetas, rowvar=False, aweights=weights, bias=True))
    try:
        return np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        logger.warning("SMC kernel covariance is singular, adding isotropic jitter")
        return np.linalg.cholesky(cov + SMC_DEGENERATE_KERNEL_VARIANCE * np.eye(dim))


def importance_log_weights(
    prior: BasePrior,
    thetas: np.ndarray,
    ancestors: np.ndarray,
    ancestor_weights: np.ndarray,
    chol: np.ndarray,
) -> np.ndarray:
    """log prior(theta_i) - log sum_j w_j K(theta_i | theta_j), up to a constant."""
    n, dim = thetas.shape
    diff = (thetas[:, None, :] - ancestors[None, :, :]).reshape(-1, dim)
    z = solve_triangular(chol, diff.T, lower=True)
    log_kernel = -0.5 * np.sum(z**2, axis=0).reshape(n, ancestors.shape[0])
    with np.errstate(divide="ignore"):
        log_ancestor = np.log(ancestor_weights)
    log_mixture = logsumexp(log_kernel + log_ancestor[None, :], axis=1)
    return prior.log_density_many(thetas) - log_mixture


def normalize_log_weights(log_weights: np.ndarray, generation: int) -> np.ndarray:
    """Exponentiate and normalize; raise InternalError when nothing survives."""
    finite = np.isfinite(log_weights)
    if not finite.any():
        raise InternalError(
            f"all importance weights vanished in generation {generation}",
            dump={"generation": generation, "log_weights": log_weights.tolist()},
        )
    shifted = np.where(finite, log_weights - log_weights[finite].max(), -np.inf)
    weights = np.exp(shifted)
    weights /= math.fsum(weights)
    return weights


def _population(
    thetas: np.ndarray,
    distances: np.ndarray,
    weights: np.ndarray,
    epsilon: float,
    generation: int,
    proposals: int,
    simulations: int,
    elapsed: float,
) -> Population:
    particles = [
        Particle(theta=theta, weight=float(w), distance=float(dist))
        for theta, w, dist in zip(thetas, weights, distances)
    ]
    return Population(
        particles=particles,
        epsilon=epsilon,
        generation=generation,
        acceptance_rate=len(particles) / proposals if proposals else 0.0,
        num_simulations=simulations,
        elapsed_seconds=elapsed,
    )


class SmcAbcSampler:
    """
    Population Monte Carlo ABC with an adaptive tolerance schedule.

    Generation 0 samples the prior. Each later generation sets its tolerance to
    the alpha-quantile of the previous distances, perturbs weighted ancestors
    with a Gaussian kernel and reweights accepted particles by
    prior / kernel mixture.
    """

    def __init__(
        self,
        prior: BasePrior,
        sim: BaseSimulator,
        observed: EmpiricalMeasure,
        disc: Discrepancy,
        cfg: AbcConfig,
    ) -> None:
        if cfg.num_particles < 2:
            raise InvalidArgumentError(f"SMC ABC needs at least 2 particles, got {cfg.num_particles}")
        self.prior = prior
        self.sim = sim
        self.observed = observed
        self.disc = disc
        self.cfg = cfg
        self.m = cfg.synthetic_size or observed.n
        self.total_simulations = 0
        self._start = 0.0

    def _elapsed(self) -> float:
        return time.perf_counter() - self._start

    def _over_time(self) -> bool:
        budget = self.cfg.time_budget_seconds
        return budget is not None and self._elapsed() >= budget

    def _remaining_simulations(self) -> int | None:
        cap = self.cfg.max_total_simulations
        return None if cap is None else cap - self.total_simulations

    def _simulate(self, theta: np.ndarray, seed: np.random.SeedSequence) -> float:
        return float(self.disc(self.observed, self.sim.generate(theta, self.m, seed)))

    def _initial(self, runner: BatchRunner) -> Population:
        n = self.cfg.num_particles

        def propose(index: int) -> Proposal:
            rng, sim_seed = proposal_streams(self.cfg.seed, 0, index)
            theta = self.prior.sample(rng)
            return theta, self._simulate(theta, sim_seed)

        remaining = self._remaining_simulations()
        count = n if remaining is None else min(n, remaining)
        results: list[Proposal] = []
        for lo in range(0, count, self.cfg.batch_size):
            if self._over_time():
                break
            hi = min(lo + self.cfg.batch_size, count)
            results.extend(runner.map(propose, range(lo, hi)))
        self.total_simulations += len(results)

        thetas = np.stack([theta for theta, _ in results]) if results else np.empty((0, 1))
        distances = np.array([dist for _, dist in results], dtype=np.float64)
        if len(results) < n:
            partial = None
            if results:
                weights = np.full(len(results), 1.0 / len(results))
                pop = _population(
                    thetas, distances, weights, float(distances.max()), 0,
                    len(results), len(results), self._elapsed(),
                )
                partial = SmcResult(
                    populations=[pop],
                    stop_reason=StopReason.SIMULATION_BUDGET,
                    total_simulations=self.total_simulations,
                )
            raise BudgetExhaustedError(
                f"budget allowed {len(results)} of {n} generation-0 simulations",
                partial=partial,
            )

        weights = np.full(n, 1.0 / n)
        return _population(
            thetas, distances, weights, float(distances.max()), 0, n, n, self._elapsed()
        )

    def _next(
        self, runner: BatchRunner, previous: Population, epsilon: float
    ) -> Population | StopReason:
        cfg = self.cfg
        generation = previous.generation + 1
        ancestors = previous.thetas
        ancestor_weights = previous.weights
        chol = kernel_cholesky(ancestors, ancestor_weights, cfg.kernel_scale)
        cdf = np.cumsum(ancestor_weights)
        cdf[-1] = 1.0
        last = len(cdf) - 1

        def propose(index: int) -> Proposal:
            rng, sim_seed = proposal_streams(cfg.seed, generation, index)
            parent = min(int(np.searchsorted(cdf, rng.random(), side="right")), last)
            theta = ancestors[parent] + chol @ rng.standard_normal(chol.shape[0])
            if not self.prior.in_support(theta):
                return theta, None
            return theta, self._simulate(theta, sim_seed)

        thetas: list[np.ndarray] = []
        distances: list[float] = []
        proposals = 0
        simulations = 0
        next_index = 0
        while len(thetas) < cfg.num_particles:
            if self._over_time():
                self.total_simulations += simulations
                return StopReason.TIME_BUDGET
            remaining = self._remaining_simulations()
            size = cfg.batch_size
            if remaining is not None:
                size = min(size, remaining - simulations)
                if size <= 0:
                    self.total_simulations += simulations
                    return StopReason.SIMULATION_BUDGET
            batch = runner.map(propose, range(next_index, next_index + size))
            next_index += size
            for theta, distance in batch:
                proposals += 1
                if distance is None:
                    continue
                simulations += 1
                if distance <= epsilon:
                    thetas.append(theta)
                    distances.append(distance)
                    if len(thetas) == cfg.num_particles:
                        break
        self.total_simulations += simulations

        new_thetas = np.stack(thetas)
        log_weights = importance_log_weights(
            self.prior, new_thetas, ancestors, ancestor_weights, chol
        )
        weights = normalize_log_weights(log_weights, generation)
        return _population(
            new_thetas,
            np.asarray(distances),
            weights,
            epsilon,
            generation,
            proposals,
            simulations,
            self._elapsed(),
        )

    def _log(self, pop: Population) -> None:
        logger.info(
            f"SMC generation {pop.generation}: eps={pop.epsilon:.6g}, "
            f"acceptance={pop.acceptance_rate:.4f}, ESS={pop.effective_sample_size:.1f}, "
            f"sims={pop.num_simulations}, t={pop.elapsed_seconds:.2f}s"
        )

    def run(self) -> SmcResult:
        """
        Run generations until a stopping condition fires.

        Returns:
            SmcResult holding every completed generation

        Raises:
            BudgetExhaustedError: the budget ran out inside generation 0
            InternalError: every importance weight underflowed
        """
        cfg = self.cfg
        self._start = time.perf_counter()
        self.total_simulations = 0

        with BatchRunner(cfg.workers) as runner:
            populations = [self._initial(runner)]
            self._log(populations[0])

            while True:
                previous = populations[-1]
                if previous.epsilon == 0.0:
                    reason = StopReason.ZERO_TOLERANCE
                    break
                if cfg.max_generations is not None and len(populations) >= cfg.max_generations:
                    reason = StopReason.MAX_GENERATIONS
                    break
                remaining = self._remaining_simulations()
                if remaining is not None and remaining <= 0:
                    reason = StopReason.SIMULATION_BUDGET
                    break
                if self._over_time():
                    reason = StopReason.TIME_BUDGET
                    break

                epsilon = float(np.quantile(previous.distances, cfg.quantile_alpha))
                if previous.epsilon - epsilon < cfg.stagnation_tolerance * previous.epsilon:
                    reason = StopReason.STAGNATION
                    break

                outcome = self._next(runner, previous, epsilon)
                if isinstance(outcome, StopReason):
                    logger.info(
                        f"SMC generation {previous.generation + 1} abandoned: {outcome.value}"
                    )
                    reason = outcome
                    break
                populations.append(outcome)
                self._log(outcome)

        logger.info(
            f"SMC ABC stopped ({reason.value}) after {len(populations)} generations, "
            f"{self.total_simulations} simulations"
        )
        return SmcResult(
            populations=populations, stop_reason=reason, total_simulations=self.total_simulations
        )


def smc_abc(
    prior: BasePrior,
    sim: BaseSimulator,
    observed: EmpiricalMeasure,
    disc: Discrepancy,
    cfg: AbcConfig,
) -> SmcResult:
    """
    Run adaptive SMC ABC.

    Args:
        prior: Prior distribution
        sim: Simulator
        observed: Observed dataset
        disc: Discrepancy between observed and synthetic data
        cfg: Sampler configuration

    Returns:
        SmcResult with one Population per completed generation
    """
    return SmcAbcSampler(prior, sim, observed, disc, cfg).run()
