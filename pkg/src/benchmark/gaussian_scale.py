"""Multivariate Gaussian scale benchmark with a conjugate posterior."""

import numpy as np

from src.config.constants import PRIOR_RATE, PRIOR_SHAPE, SIGMA_STAR_SQ
from src.errors import InvalidArgumentError
from src.inference.base import BasePrior, BaseSimulator, SeedLike
from src.models.gaussian import GaussianScaleModel, InverseGamma
from src.models.measure import EmpiricalMeasure


def ig_sample(ig: InverseGamma, count: int, seed: SeedLike | None = None) -> np.ndarray:
    """
    Draw i.i.d. samples from IG(a, b) as reciprocals of Gamma(a, rate b).

    Args:
        ig: Inverse gamma parameters
        count: Number of draws
        seed: RNG seed

    Returns:
        Array of count positive draws
    """
    if count < 0:
        raise InvalidArgumentError(f"count must be >= 0, got {count}")
    rng = np.random.default_rng(seed)
    return 1.0 / rng.gamma(ig.shape, 1.0 / ig.rate, size=count)


def make_gaussian_model(
    dim: int, seed: SeedLike | None = None, sigma_star_sq: float = SIGMA_STAR_SQ
) -> GaussianScaleModel:
    """Benchmark model with m* ~ N(0, I_d) drawn from the seed."""
    if dim < 1:
        raise InvalidArgumentError(f"dim must be >= 1, got {dim}")
    rng = np.random.default_rng(seed)
    return GaussianScaleModel(
        dim=dim, mean=rng.standard_normal(dim), sigma_star_sq=sigma_star_sq
    )


def gaussian_scale_simulate(
    model: GaussianScaleModel, theta: float, m: int, seed: SeedLike | None = None
) -> EmpiricalMeasure:
    """
    Draw m points from N(m*, theta I_d).

    Raises:
        InvalidArgumentError: theta <= 0 or m < 1
    """
    if not theta > 0:
        raise InvalidArgumentError(f"variance must be positive, got {theta}")
    if m < 1:
        raise InvalidArgumentError(f"m must be >= 1, got {m}")
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal((m, model.dim))
    return EmpiricalMeasure(points=model.mean + np.sqrt(theta) * noise)


def true_posterior(
    model: GaussianScaleModel,
    observed: EmpiricalMeasure,
    prior: InverseGamma | None = None,
) -> InverseGamma:
    """
    Exact posterior of sigma² under an IG prior.

    IG(a + nd/2, b + 1/2 sum_i ||y_i - m*||²), the prior defaulting to IG(1, 1).
    """
    if observed.d != model.dim:
        raise InvalidArgumentError(
            f"observed dimension {observed.d} does not match model dimension {model.dim}"
        )
    prior = prior or InverseGamma(shape=PRIOR_SHAPE, rate=PRIOR_RATE)
    residual = float(np.sum((observed.points - model.mean) ** 2))
    return InverseGamma(
        shape=prior.shape + observed.n * observed.d / 2.0,
        rate=prior.rate + 0.5 * residual,
    )


def sample_variance_summary(data: EmpiricalMeasure) -> float:
    """Pooled sample variance (1/(nd)) sum_i ||y_i - ybar||²."""
    centered = data.points - data.points.mean(axis=0)
    return float(np.sum(centered**2) / (data.n * data.d))


class InverseGammaPrior(BasePrior):
    """Inverse gamma prior on the scalar variance."""

    dim = 1

    def __init__(self, ig: InverseGamma | None = None) -> None:
        self.ig = ig or InverseGamma(shape=PRIOR_SHAPE, rate=PRIOR_RATE)

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return np.array([1.0 / rng.gamma(self.ig.shape, 1.0 / self.ig.rate)])

    def log_density(self, theta: np.ndarray) -> float:
        value = float(np.atleast_1d(theta)[0])
        if not value > 0:
            return float("-inf")
        return float(self.ig.log_pdf(value))

    def log_density_many(self, thetas: np.ndarray) -> np.ndarray:
        values = np.asarray(thetas, dtype=np.float64).reshape(len(thetas), -1)[:, 0]
        out = np.full(values.shape, -np.inf)
        positive = values > 0
        out[positive] = self.ig.log_pdf(values[positive])
        return out


class GaussianScaleSimulator(BaseSimulator):
    """Simulator adapter theta = (sigma²,) -> N(m*, sigma² I_d) data."""

    def __init__(self, model: GaussianScaleModel) -> None:
        self.model = model

    def generate(self, theta: np.ndarray, m: int, seed: SeedLike) -> EmpiricalMeasure:
        return gaussian_scale_simulate(self.model, float(np.atleast_1d(theta)[0]), m, seed)
