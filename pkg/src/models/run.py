"""Command configuration loaded from JSON and overridden by CLI flags."""

import json
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from src.config.constants import (
    BENCH_DIMENSIONS,
    BENCH_OBSERVATIONS,
    BENCH_PARTICLES,
    CURVE_SAMPLES,
    DEFAULT_NUM_PROJECTIONS,
    DEFAULT_ORDER_P,
    GRID_MAX,
    GRID_MIN,
    GRID_SIZE,
    POSTERIOR_REFERENCE_DRAWS,
    SIGMA_STAR_SQ,
    SMC_QUANTILE_ALPHA,
)
from src.config.settings import settings
from src.models.image import DenoiseParams

Command = Literal["distance-curve", "gaussian-bench", "denoise", "psnr"]

CURVE_DISTANCES = ("sliced-wasserstein", "hilbert", "swapping", "knn-kl", "analytic-w2")
EXTRA_CURVE_DISTANCES = ("analytic-sw2",)
BENCH_METHODS = ("sw", "hilbert", "swapping", "kl", "euclidean-summary")


class DistanceCurveConfig(BaseModel):
    """Distances between a fixed N(0, 4 I_d) sample and N(0, sigma² I_d) over a grid."""

    dim: int = Field(default=2, ge=1, description="Dimension d")
    n: int = Field(default=CURVE_SAMPLES, ge=2, description="Draws per measure")
    grid_min: float = Field(default=GRID_MIN, gt=0.0, description="Smallest sigma²")
    grid_max: float = Field(default=GRID_MAX, gt=0.0, description="Largest sigma²")
    grid_size: int = Field(default=GRID_SIZE, ge=1, description="Number of grid values")
    distances: list[str] = Field(default_factory=lambda: list(CURVE_DISTANCES))
    num_projections: int = Field(default=DEFAULT_NUM_PROJECTIONS, ge=1, description="L")
    order_p: float = Field(default=DEFAULT_ORDER_P, ge=1.0, description="Wasserstein order")
    sigma_star_sq: float = Field(default=SIGMA_STAR_SQ, gt=0.0, description="Observed variance")


class GaussianBenchConfig(BaseModel):
    """SMC-ABC strategies on the Gaussian scale model."""

    dims: list[int] = Field(default_factory=lambda: list(BENCH_DIMENSIONS))
    n: int = Field(default=BENCH_OBSERVATIONS, ge=2, description="Observed sample size")
    num_particles: int = Field(default=BENCH_PARTICLES, ge=2, description="Particles N")
    methods: list[str] = Field(default_factory=lambda: list(BENCH_METHODS))
    time_budget_seconds: float | None = Field(
        default_factory=lambda: settings.TIME_BUDGET_SECONDS,
        gt=0.0,
        description="Wall-clock budget per method and dimension (None = unlimited)",
    )
    max_generations: int | None = Field(default=20, ge=1, description="Generation cap")
    max_total_simulations: int | None = Field(default=None, ge=1, description="Simulation cap")
    quantile_alpha: float = Field(default=SMC_QUANTILE_ALPHA, gt=0.0, lt=1.0)
    num_projections: int = Field(default=DEFAULT_NUM_PROJECTIONS, ge=1, description="L")
    order_p: float = Field(default=DEFAULT_ORDER_P, ge=1.0, description="Wasserstein order")
    reference_draws: int = Field(
        default=POSTERIOR_REFERENCE_DRAWS, ge=1, description="Analytic posterior draws"
    )

    @field_validator("dims")
    @classmethod
    def _positive_dims(cls, dims: list[int]) -> list[int]:
        if not dims or any(d < 1 for d in dims):
            raise ValueError("dims must be a non-empty list of positive integers")
        return dims

    @model_validator(mode="after")
    def _check_stopping(self) -> "GaussianBenchConfig":
        limits = (self.max_generations, self.max_total_simulations, self.time_budget_seconds)
        if all(limit is None for limit in limits):
            raise ValueError("at least one of the generation, simulation or time limits must be set")
        return self


class DenoiseConfig(BaseModel):
    """Denoise one PGM image."""

    input: Path | None = Field(default=None, description="Input PGM")
    clean: Path | None = Field(default=None, description="Clean reference PGM")
    method: Literal["nlmeans", "swabc"] = "swabc"
    add_noise: bool = Field(default=False, description="Corrupt the input with N(0, sigma²) first")
    report_psnr: bool = Field(default=False, description="Require a clean reference")
    params: DenoiseParams = Field(default_factory=DenoiseParams)


class PsnrConfig(BaseModel):
    """Compare two PGM images."""

    a: Path | None = None
    b: Path | None = None


class RunConfig(BaseModel):
    """Effective configuration of one command invocation."""

    command: Command
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0)
    out: Path = Field(default_factory=lambda: Path(settings.OUTPUT_DIR))
    threads: int | None = Field(default=None, ge=1, description="Worker cap below SWABC_THREADS")
    distance_curve: DistanceCurveConfig = Field(default_factory=DistanceCurveConfig)
    gaussian_bench: GaussianBenchConfig = Field(default_factory=GaussianBenchConfig)
    denoise: DenoiseConfig = Field(default_factory=DenoiseConfig)
    psnr: PsnrConfig = Field(default_factory=PsnrConfig)

    @classmethod
    def from_json(cls, path: str | Path, **overrides: Any) -> "RunConfig":
        """Load a JSON file; keyword overrides replace top-level keys."""
        payload = json.loads(Path(path).read_text())
        payload.update(overrides)
        return cls.model_validate(payload)

    def sidecar(self) -> dict[str, Any]:
        """JSON-ready dump of the settings relevant to this command."""
        section = self.command.replace("-", "_")
        return {
            "command": self.command,
            "seed": self.seed,
            "out": str(self.out),
            "threads": self.threads,
            section: getattr(self, section).model_dump(mode="json"),
        }
