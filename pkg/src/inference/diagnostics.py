"""Posterior accuracy metrics and population export."""

from pathlib import Path

import pandas as pd
from numpy.typing import ArrayLike

from src.distances.wasserstein import wasserstein_1d
from src.models.inference import Population, SmcResult


def posterior_w1(
    samples_a: ArrayLike,
    samples_b: ArrayLike,
    weights_a: ArrayLike | None = None,
    weights_b: ArrayLike | None = None,
) -> float:
    """
    W_1 between two scalar posterior samples.

    Weights let a weighted SMC population be compared without resampling.
    Empty input raises InvalidArgumentError.
    """
    return wasserstein_1d(samples_a, samples_b, p=1.0, weights_x=weights_a, weights_y=weights_b)


def population_frame(populations: list[Population] | SmcResult) -> pd.DataFrame:
    """One row per particle: generation, theta_0.., weight, distance, epsilon."""
    if isinstance(populations, SmcResult):
        populations = populations.populations
    frames = []
    for pop in populations:
        thetas = pop.thetas
        frame = pd.DataFrame({"generation": pop.generation}, index=range(len(pop.particles)))
        for j in range(thetas.shape[1]):
            frame[f"theta_{j}"] = thetas[:, j]
        frame["weight"] = pop.weights
        frame["distance"] = pop.distances
        frame["epsilon"] = pop.epsilon
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


def generation_summary(result: SmcResult) -> list[dict[str, float | int]]:
    """Per-generation diagnostics for the JSON sidecar."""
    return [
        {
            "generation": pop.generation,
            "epsilon": pop.epsilon,
            "acceptance_rate": pop.acceptance_rate,
            "effective_sample_size": pop.effective_sample_size,
            "num_simulations": pop.num_simulations,
            "elapsed_seconds": pop.elapsed_seconds,
        }
        for pop in result.populations
    ]


def write_population_csv(populations: list[Population] | SmcResult, path: str | Path) -> None:
    """Write population_frame to CSV with full float precision."""
    population_frame(populations).to_csv(path, index=False, float_format="%.17g")
