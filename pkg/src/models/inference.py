"""ABC sampler configuration and result models."""

import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.config.constants import (
    PROPOSAL_BATCH_SIZE,
    SMC_KERNEL_SCALE,
    SMC_QUANTILE_ALPHA,
    SMC_STAGNATION_TOLERANCE,
    WEIGHT_SUM_TOLERANCE,
)


class StopReason(str, Enum):
    """Why an SMC run stopped producing generations."""

    MAX_GENERATIONS = "max_generations"
    SIMULATION_BUDGET = "simulation_budget"
    TIME_BUDGET = "time_budget"
    STAGNATION = "stagnation"
    ZERO_TOLERANCE = "zero_tolerance"


class AbcConfig(BaseModel):
    """Settings shared by the rejection and SMC samplers."""

    num_particles: int = Field(default=1000, ge=1, description="T accepted samples or N particles")
    epsilon: float | None = Field(default=None, description="Rejection tolerance (> 0)")
    quantile_alpha: float = Field(
        default=SMC_QUANTILE_ALPHA, gt=0.0, lt=1.0, description="SMC tolerance quantile"
    )
    synthetic_size: int | None = Field(
        default=None, ge=1, description="Synthetic sample size m (defaults to observed n)"
    )
    max_generations: int | None = Field(default=20, ge=1, description="SMC generation cap")
    max_total_simulations: int | None = Field(default=None, ge=1, description="Simulator call cap")
    time_budget_seconds: float | None = Field(default=None, gt=0.0, description="Wall-clock cap")
    kernel_scale: float = Field(
        default=SMC_KERNEL_SCALE, gt=0.0, description="Perturbation covariance multiplier"
    )
    stagnation_tolerance: float = Field(
        default=SMC_STAGNATION_TOLERANCE, ge=0.0, description="Minimum relative tolerance gain"
    )
    batch_size: int = Field(
        default=PROPOSAL_BATCH_SIZE, ge=1, description="Proposals evaluated per parallel batch"
    )
    workers: int | None = Field(default=None, ge=1, description="Thread cap (None = settings)")
    seed: int = Field(default=0, ge=0, description="Run seed")

    @model_validator(mode="after")
    def _check_stopping(self) -> "AbcConfig":
        limits = (self.max_generations, self.max_total_simulations, self.time_budget_seconds)
        if all(limit is None for limit in limits):
            raise ValueError("at least one stopping condition must be finite")
        return self


class Particle(BaseModel):
    """One weighted parameter value accepted by a sampler."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    theta: np.ndarray = Field(..., description="Parameter vector")
    weight: float = Field(..., ge=0.0, description="Normalized importance weight")
    distance: float = Field(..., ge=0.0, description="Discrepancy at acceptance")

    @field_validator("theta", mode="before")
    @classmethod
    def _as_vector(cls, value: object) -> np.ndarray:
        return np.atleast_1d(np.asarray(value, dtype=np.float64))


class Population(BaseModel):
    """Weighted particle set produced by one SMC generation."""

    particles: list[Particle] = Field(..., min_length=1, description="Accepted particles")
    epsilon: float = Field(..., ge=0.0, description="Tolerance used for this generation")
    generation: int = Field(..., ge=0, description="Generation index t")
    acceptance_rate: float = Field(..., ge=0.0, le=1.0, description="Accepted / proposed")
    num_simulations: int = Field(default=0, ge=0, description="Simulator calls this generation")
    elapsed_seconds: float = Field(default=0.0, ge=0.0, description="Wall clock since run start")

    @model_validator(mode="after")
    def _check_invariants(self) -> "Population":
        total = math.fsum(p.weight for p in self.particles)
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise ValueError(f"particle weights sum to {total}, expected 1")
        worst = max(p.distance for p in self.particles)
        if worst > self.epsilon:
            raise ValueError(f"particle distance {worst} exceeds epsilon {self.epsilon}")
        return self

    @property
    def thetas(self) -> np.ndarray:
        """N x d_theta array of particle parameters."""
        return np.stack([p.theta for p in self.particles])

    @property
    def weights(self) -> np.ndarray:
        """Particle weights."""
        return np.array([p.weight for p in self.particles])

    @property
    def distances(self) -> np.ndarray:
        """Discrepancies at acceptance."""
        return np.array([p.distance for p in self.particles])

    @property
    def effective_sample_size(self) -> float:
        """Kish effective sample size of the weights."""
        w = self.weights
        return float(1.0 / np.sum(w**2))


class RejectionResult(BaseModel):
    """Samples accepted by rejection ABC and proposal diagnostics."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    samples: np.ndarray = Field(..., description="Accepted parameters, T x d_theta")
    distances: np.ndarray = Field(..., description="Discrepancy of each accepted sample")
    num_proposals: int = Field(..., ge=0, description="Proposals consumed")
    budget_exhausted: bool = Field(default=False, description="Stopped by the simulation cap")

    @property
    def acceptance_rate(self) -> float:
        """Accepted / proposed."""
        if self.num_proposals == 0:
            return 0.0
        return len(self.samples) / self.num_proposals


class SmcResult(BaseModel):
    """Every generation of an SMC-ABC run."""

    populations: list[Population] = Field(default_factory=list, description="One per generation")
    stop_reason: StopReason = Field(..., description="Condition that ended the run")
    total_simulations: int = Field(default=0, ge=0, description="Simulator calls overall")

    @property
    def budget_exhausted(self) -> bool:
        """True when a simulation or time budget ended the run."""
        return self.stop_reason in (StopReason.SIMULATION_BUDGET, StopReason.TIME_BUDGET)

    @property
    def final(self) -> Population:
        """Last completed generation."""
        return self.populations[-1]

    @property
    def epsilons(self) -> list[float]:
        """Tolerance schedule."""
        return [pop.epsilon for pop in self.populations]
