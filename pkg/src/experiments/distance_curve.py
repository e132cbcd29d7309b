"""Distances between Gaussian samples across a grid of variances."""

import math

import numpy as np
import pandas as pd
from loguru import logger

from src.distances import (
    gaussian_sw2_oracle,
    gaussian_w2_analytic,
    hilbert_distance,
    knn_kl_estimate,
    sample_projections,
    sliced_wasserstein,
    swapping_distance,
)
from src.errors import UsageError
from src.inference.streams import BatchRunner
from src.models.measure import DistanceConfig, EmpiricalMeasure
from src.models.run import CURVE_DISTANCES, EXTRA_CURVE_DISTANCES, DistanceCurveConfig

CURVE_COLUMNS = ["sigma_sq", "distance_name", "value"]


def _zero_mean_sample(variance: float, n: int, d: int, seed: np.random.SeedSequence) -> EmpiricalMeasure:
    rng = np.random.default_rng(seed)
    return EmpiricalMeasure(points=math.sqrt(variance) * rng.standard_normal((n, d)))


def check_distance_names(names: list[str]) -> None:
    """Raise UsageError on names outside the supported set."""
    valid = CURVE_DISTANCES + EXTRA_CURVE_DISTANCES
    unknown = [name for name in names if name not in valid]
    if unknown:
        raise UsageError(
            f"unknown distance name(s) {', '.join(unknown)}; valid names: {', '.join(valid)}"
        )


def distance_curve(
    cfg: DistanceCurveConfig, seed: int, workers: int | None = None
) -> pd.DataFrame:
    """
    Evaluate each requested distance between one observed N(0, s* I_d) sample
    and an N(0, s I_d) sample for every grid value s.

    The synthetic samples share one standard normal base draw scaled by
    sqrt(s), so the curve is smooth in s.

    Args:
        cfg: Grid, dimension, sample size and distance names
        seed: Run seed
        workers: Thread cap

    Returns:
        Long-format frame with columns sigma_sq, distance_name, value
    """
    check_distance_names(cfg.distances)
    if cfg.grid_max < cfg.grid_min:
        raise UsageError(f"grid_max {cfg.grid_max} is below grid_min {cfg.grid_min}")

    grid = np.linspace(cfg.grid_min, cfg.grid_max, cfg.grid_size)
    d = cfg.dim
    observed = _zero_mean_sample(cfg.sigma_star_sq, cfg.n, d, np.random.SeedSequence([seed, 0]))
    sw_cfg = DistanceConfig(order_p=cfg.order_p, num_projections=cfg.num_projections, seed=seed)
    projections = sample_projections(d, cfg.num_projections, seed)
    base = np.random.default_rng(np.random.SeedSequence([seed, 1])).standard_normal((cfg.n, d))
    sigma_star = math.sqrt(cfg.sigma_star_sq)
    logger.info(
        f"Distance curve: d={d}, n={cfg.n}, {len(grid)} grid values, "
        f"distances={','.join(cfg.distances)}"
    )

    def evaluate(k: int) -> list[tuple[float, str, float]]:
        sigma_sq = float(grid[k])
        synthetic = EmpiricalMeasure(points=math.sqrt(sigma_sq) * base)
        rows = []
        for name in cfg.distances:
            if name == "sliced-wasserstein":
                value = sliced_wasserstein(observed, synthetic, sw_cfg, projections)
            elif name == "hilbert":
                value = hilbert_distance(observed, synthetic, cfg.order_p)
            elif name == "swapping":
                value = swapping_distance(observed, synthetic, cfg.order_p)
            elif name == "knn-kl":
                value = knn_kl_estimate(observed, synthetic).value
            elif name == "analytic-w2":
                value = gaussian_w2_analytic(sigma_star, math.sqrt(sigma_sq), d)
            else:
                value = gaussian_sw2_oracle(sigma_star, math.sqrt(sigma_sq), d)
            rows.append((sigma_sq, name, float(value)))
        return rows

    with BatchRunner(workers) as runner:
        per_point = runner.map(evaluate, range(len(grid)))

    frame = pd.DataFrame([row for rows in per_point for row in rows], columns=CURVE_COLUMNS)
    for name, group in frame.groupby("distance_name", sort=False):
        best = group.loc[group["value"].idxmin(), "sigma_sq"]
        logger.info(f"  {name}: minimum at sigma_sq={best:.3f}")
    return frame
