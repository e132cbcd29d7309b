"""Named discrepancy plugs for the ABC samplers."""

from collections.abc import Callable

import numpy as np

from src.config.constants import (
    DEFAULT_NUM_PROJECTIONS,
    DEFAULT_ORDER_P,
    HILBERT_BITS,
    KL_DEFAULT_NEIGHBORS,
    SWAP_MAX_SWEEPS,
)
from src.distances import (
    hilbert_distance,
    knn_kl_estimate,
    sample_projections,
    sliced_wasserstein,
    swapping_distance,
    wasserstein_1d,
)
from src.errors import InvalidArgumentError
from src.inference.base import Discrepancy
from src.models.measure import DistanceConfig, EmpiricalMeasure

Summary = Callable[[EmpiricalMeasure], np.ndarray | float]

DISCREPANCY_NAMES = (
    "sliced-wasserstein",
    "hilbert",
    "swapping",
    "knn-kl",
    "euclidean-summary",
    "wasserstein-1d",
)


def summary_discrepancy(summary: Summary) -> Discrepancy:
    """Euclidean distance between summary statistics of the two datasets."""

    def disc(observed: EmpiricalMeasure, synthetic: EmpiricalMeasure) -> float:
        s_obs = np.atleast_1d(np.asarray(summary(observed), dtype=np.float64))
        s_syn = np.atleast_1d(np.asarray(summary(synthetic), dtype=np.float64))
        return float(np.linalg.norm(s_obs - s_syn))

    return disc


def make_discrepancy(
    name: str,
    dim: int,
    order_p: float = DEFAULT_ORDER_P,
    num_projections: int = DEFAULT_NUM_PROJECTIONS,
    seed: int = 0,
    summary: Summary | None = None,
) -> Discrepancy:
    """
    Build a discrepancy by name.

    The sliced-wasserstein plug draws its projections once, so every call of
    one run compares datasets along the same directions.

    Args:
        name: One of DISCREPANCY_NAMES
        dim: Data dimension d
        order_p: Wasserstein order
        num_projections: L for sliced-wasserstein
        seed: Projection seed
        summary: Summary statistic, required for euclidean-summary

    Returns:
        Callable (observed, synthetic) -> float >= 0
    """
    if name == "sliced-wasserstein":
        cfg = DistanceConfig(order_p=order_p, num_projections=num_projections, seed=seed)
        projections = sample_projections(dim, num_projections, seed)
        return lambda obs, syn: sliced_wasserstein(obs, syn, cfg, projections)
    if name == "hilbert":
        return lambda obs, syn: hilbert_distance(obs, syn, order_p, HILBERT_BITS)
    if name == "swapping":
        return lambda obs, syn: swapping_distance(obs, syn, order_p, SWAP_MAX_SWEEPS, HILBERT_BITS)
    if name == "knn-kl":
        # The estimator can go negative; ABC needs a non-negative discrepancy
        return lambda obs, syn: max(0.0, knn_kl_estimate(obs, syn, KL_DEFAULT_NEIGHBORS).value)
    if name == "euclidean-summary":
        if summary is None:
            raise InvalidArgumentError("euclidean-summary needs a summary statistic")
        return summary_discrepancy(summary)
    if name == "wasserstein-1d":
        if dim != 1:
            raise InvalidArgumentError(f"wasserstein-1d needs d = 1, got d = {dim}")
        return lambda obs, syn: wasserstein_1d(obs.points[:, 0], syn.points[:, 0], order_p)
    raise InvalidArgumentError(
        f"unknown discrepancy {name!r}; expected one of {', '.join(DISCREPANCY_NAMES)}"
    )
