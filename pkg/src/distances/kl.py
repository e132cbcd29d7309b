"""k-nearest-neighbour Kullback-Leibler divergence estimator."""

import numpy as np
from loguru import logger
from scipy.spatial import cKDTree

from src.config.constants import KL_DEFAULT_NEIGHBORS, KL_FLOOR_FACTOR
from src.errors import InvalidArgumentError
from src.models.measure import EmpiricalMeasure, KlEstimate


def _kth_distance(tree: cKDTree, queries: np.ndarray, k: int) -> np.ndarray:
    distances, _ = tree.query(queries, k=k)
    if k == 1:
        return np.asarray(distances, dtype=np.float64)
    return np.asarray(distances[:, k - 1], dtype=np.float64)


def knn_kl_estimate(
    a: EmpiricalMeasure, b: EmpiricalMeasure, k: int = KL_DEFAULT_NEIGHBORS
) -> KlEstimate:
    """
    Estimate KL(P_a || P_b) from samples with k-th nearest-neighbour distances.

    value = (d/n) sum_i log(nu_k(i) / rho_k(i)) + log(m / (n - 1)), where
    rho_k(i) is the distance from a_i to its k-th neighbour in a (itself
    excluded) and nu_k(i) to its k-th neighbour in b. Zero distances caused
    by duplicate points are floored at 1e-6 times the smallest positive
    neighbour distance and counted in degenerate_count.

    Args:
        a: Samples from P (n > k)
        b: Samples from Q (m >= k)
        k: Neighbour rank

    Returns:
        KlEstimate with the value and the number of floored distances
    """
    if k < 1:
        raise InvalidArgumentError(f"k must be >= 1, got {k}")
    if a.d != b.d:
        raise InvalidArgumentError(f"dimension mismatch: {a.d} vs {b.d}")
    if a.n <= k:
        raise InvalidArgumentError(f"need more than k={k} samples in a, got {a.n}")
    if b.n < k:
        raise InvalidArgumentError(f"need at least k={k} samples in b, got {b.n}")

    n, m, d = a.n, b.n, a.d
    # Query k + 1 neighbours within a: the closest is the point itself
    rho = _kth_distance(cKDTree(a.points), a.points, k + 1)
    nu = _kth_distance(cKDTree(b.points), a.points, k)

    degenerate = int(np.count_nonzero(rho == 0.0) + np.count_nonzero(nu == 0.0))
    if degenerate:
        positive = np.concatenate([rho[rho > 0.0], nu[nu > 0.0]])
        floor = KL_FLOOR_FACTOR * (positive.min() if positive.size else 1.0)
        rho = np.maximum(rho, floor)
        nu = np.maximum(nu, floor)
        logger.warning(f"k-NN KL: floored {degenerate} zero neighbour distances at {floor:.3g}")

    value = d / n * float(np.sum(np.log(nu / rho))) + float(np.log(m / (n - 1.0)))
    return KlEstimate(value=value, degenerate_count=degenerate)
