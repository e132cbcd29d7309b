"""Empirical measures and distance configuration models."""

from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.config.constants import (
    DEFAULT_NUM_PROJECTIONS,
    DEFAULT_ORDER_P,
    UNIT_NORM_TOLERANCE,
)


class EmpiricalMeasure(BaseModel):
    """Uniform mixture of Dirac masses at n points of R^d."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    points: np.ndarray = Field(..., description="n x d array of sample values")

    @field_validator("points", mode="before")
    @classmethod
    def _as_point_array(cls, value: object) -> np.ndarray:
        points = np.asarray(value, dtype=np.float64)
        if points.ndim == 1:
            points = points[:, None]
        if points.ndim != 2:
            raise ValueError(f"points must be a 2-D array, got shape {points.shape}")
        if points.shape[0] < 1 or points.shape[1] < 1:
            raise ValueError(f"empirical measure needs n >= 1 and d >= 1, got {points.shape}")
        if not np.all(np.isfinite(points)):
            raise ValueError("points must be finite (no NaN or Inf)")
        return points

    @property
    def n(self) -> int:
        """Number of sample points."""
        return int(self.points.shape[0])

    @property
    def d(self) -> int:
        """Ambient dimension."""
        return int(self.points.shape[1])

    def to_csv(self, path: str | Path) -> None:
        """Write one row per point, d columns, no header."""
        pd.DataFrame(self.points).to_csv(path, header=False, index=False, float_format="%.17g")

    @classmethod
    def from_csv(cls, path: str | Path) -> "EmpiricalMeasure":
        """Read a headerless CSV written by to_csv."""
        frame = pd.read_csv(path, header=None, dtype=np.float64)
        return cls(points=frame.to_numpy())


class ProjectionSet(BaseModel):
    """L unit directions on the sphere S^{d-1}."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    directions: np.ndarray = Field(..., description="L x d array of unit vectors")
    seed: int | None = Field(default=None, description="Seed the directions were drawn from")

    @field_validator("directions", mode="before")
    @classmethod
    def _as_unit_rows(cls, value: object) -> np.ndarray:
        directions = np.atleast_2d(np.asarray(value, dtype=np.float64))
        if directions.ndim != 2 or directions.shape[0] < 1 or directions.shape[1] < 1:
            raise ValueError(f"directions must be a non-empty L x d array, got {directions.shape}")
        norms = np.linalg.norm(directions, axis=1)
        if not np.all(np.abs(norms - 1.0) <= UNIT_NORM_TOLERANCE):
            raise ValueError("every projection direction must have unit Euclidean norm")
        return directions

    @property
    def L(self) -> int:  # noqa: N802
        """Number of projections."""
        return int(self.directions.shape[0])

    @property
    def d(self) -> int:
        """Dimension of the projected space."""
        return int(self.directions.shape[1])


class DistanceConfig(BaseModel):
    """Parameters of the Sliced-Wasserstein Monte Carlo estimator."""

    order_p: float = Field(default=DEFAULT_ORDER_P, ge=1.0, description="Wasserstein order p")
    num_projections: int = Field(
        default=DEFAULT_NUM_PROJECTIONS, ge=1, description="Number of projections L"
    )
    seed: int = Field(default=0, description="Seed for the projection directions")


class KlEstimate(BaseModel):
    """Result of the k-nearest-neighbour KL estimator."""

    value: float = Field(..., description="Estimated KL divergence (may be negative)")
    degenerate_count: int = Field(
        default=0, ge=0, description="Zero neighbour distances replaced by the floor"
    )
