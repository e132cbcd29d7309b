"""Gaussian scale benchmark models."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy import stats

from src.config.constants import SIGMA_STAR_SQ


class InverseGamma(BaseModel):
    """Inverse gamma law IG(shape, rate) with density ∝ x^(-a-1) exp(-b/x)."""

    model_config = ConfigDict(frozen=True)

    shape: float = Field(..., gt=0.0, description="Shape a")
    rate: float = Field(..., gt=0.0, description="Rate b")

    @property
    def mean(self) -> float:
        """b / (a - 1), infinite when a <= 1."""
        if self.shape <= 1.0:
            return float("inf")
        return self.rate / (self.shape - 1.0)

    @property
    def variance(self) -> float:
        """b² / ((a-1)²(a-2)), infinite when a <= 2."""
        if self.shape <= 2.0:
            return float("inf")
        return self.rate**2 / ((self.shape - 1.0) ** 2 * (self.shape - 2.0))

    @property
    def mode(self) -> float:
        """b / (a + 1)."""
        return self.rate / (self.shape + 1.0)

    def log_pdf(self, x: np.ndarray | float) -> np.ndarray | float:
        """Log density, -inf outside x > 0."""
        return stats.invgamma.logpdf(x, self.shape, scale=self.rate)


class GaussianScaleModel(BaseModel):
    """Observations N(m*, sigma² I_d) with known mean and unknown variance."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dim: int = Field(..., ge=1, description="Observation dimension d")
    mean: np.ndarray = Field(..., description="Known mean vector m*")
    sigma_star_sq: float = Field(default=SIGMA_STAR_SQ, gt=0.0, description="True variance")

    @field_validator("mean", mode="before")
    @classmethod
    def _as_mean(cls, value: object) -> np.ndarray:
        mean = np.atleast_1d(np.asarray(value, dtype=np.float64))
        if mean.ndim != 1 or not np.all(np.isfinite(mean)):
            raise ValueError("mean must be a finite vector")
        return mean

    @model_validator(mode="after")
    def _check_dim(self) -> "GaussianScaleModel":
        if self.mean.shape[0] != self.dim:
            raise ValueError(f"mean has {self.mean.shape[0]} entries, expected {self.dim}")
        return self
