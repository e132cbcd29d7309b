"""Prior and simulator interfaces for likelihood-free samplers."""

from abc import ABC, abstractmethod
from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike

from src.errors import InvalidArgumentError
from src.models.measure import EmpiricalMeasure

# (observed, synthetic) -> non-negative discrepancy
Discrepancy = Callable[[EmpiricalMeasure, EmpiricalMeasure], float]

SeedLike = int | np.random.SeedSequence | np.random.Generator


class BasePrior(ABC):
    """Abstract prior distribution over R^{d_theta}."""

    dim: int = 1

    @abstractmethod
    def sample(self, rng: np.random.Generator) -> np.ndarray:
        """
        Draw one parameter vector.

        Args:
            rng: Generator owned by the caller

        Returns:
            Vector of length dim inside the support
        """

    @abstractmethod
    def log_density(self, theta: np.ndarray) -> float:
        """Log prior density, -inf outside the support."""

    def log_density_many(self, thetas: np.ndarray) -> np.ndarray:
        """Log density of every row of an N x d_theta array."""
        return np.array([self.log_density(theta) for theta in thetas], dtype=np.float64)

    def in_support(self, theta: np.ndarray) -> bool:
        """True where the log density is finite."""
        return bool(np.isfinite(self.log_density(theta)))


class FunctionPrior(BasePrior):
    """Prior assembled from a sampler and a log density callable."""

    def __init__(
        self,
        sampler: Callable[[np.random.Generator], ArrayLike],
        log_density: Callable[[np.ndarray], float],
        dim: int = 1,
    ) -> None:
        self._sampler = sampler
        self._log_density = log_density
        self.dim = dim

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return np.atleast_1d(np.asarray(self._sampler(rng), dtype=np.float64))

    def log_density(self, theta: np.ndarray) -> float:
        return float(self._log_density(np.atleast_1d(theta)))


class UniformPrior(BasePrior):
    """Uniform prior on an axis-aligned box."""

    def __init__(self, low: ArrayLike, high: ArrayLike) -> None:
        self.low = np.atleast_1d(np.asarray(low, dtype=np.float64))
        self.high = np.atleast_1d(np.asarray(high, dtype=np.float64))
        if self.low.shape != self.high.shape or np.any(self.high <= self.low):
            raise InvalidArgumentError("uniform prior needs low < high in every coordinate")
        self.dim = int(self.low.shape[0])
        self._log_volume = float(np.sum(np.log(self.high - self.low)))

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return rng.uniform(self.low, self.high)

    def log_density(self, theta: np.ndarray) -> float:
        theta = np.atleast_1d(theta)
        if np.all(theta >= self.low) and np.all(theta <= self.high):
            return -self._log_volume
        return float("-inf")


class BaseSimulator(ABC):
    """Abstract generative model theta -> synthetic dataset."""

    @abstractmethod
    def generate(self, theta: np.ndarray, m: int, seed: SeedLike) -> EmpiricalMeasure:
        """
        Simulate m i.i.d. points given theta.

        Args:
            theta: Parameter vector
            m: Number of synthetic points
            seed: Seed, SeedSequence or Generator; equal seeds give equal output

        Returns:
            EmpiricalMeasure of m points
        """


class FunctionSimulator(BaseSimulator):
    """Simulator wrapping a callable (theta, m, rng) -> m x d array."""

    def __init__(self, fn: Callable[[np.ndarray, int, np.random.Generator], ArrayLike]) -> None:
        self._fn = fn

    def generate(self, theta: np.ndarray, m: int, seed: SeedLike) -> EmpiricalMeasure:
        rng = np.random.default_rng(seed)
        return EmpiricalMeasure(points=self._fn(np.atleast_1d(theta), m, rng))
