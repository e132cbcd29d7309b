"""Greedy swapping refinement of the Hilbert matching."""

import numpy as np
from loguru import logger
from scipy.spatial.distance import cdist

from src.config.constants import HILBERT_BITS, SWAP_MAX_SWEEPS
from src.distances.hilbert import hilbert_matching
from src.errors import InvalidArgumentError
from src.models.measure import EmpiricalMeasure

# Relative slack below which a swap does not count as an improvement
_IMPROVEMENT_TOLERANCE = 1e-12


def _sweep(cost: np.ndarray, perm: np.ndarray) -> int:
    """
    One lexicographic pass over pairs (i, j), i < j, with first-improvement swaps.

    Args:
        cost: n x n cost matrix, cost[i, k] = ||a_i - b_k||^p
        perm: Current assignment i -> perm[i], updated in place

    Returns:
        Number of swaps performed
    """
    n = perm.shape[0]
    swaps = 0
    for i in range(n - 1):
        start = i + 1
        while start < n:
            j = np.arange(start, n)
            current = cost[i, perm[i]] + cost[j, perm[j]]
            swapped = cost[i, perm[j]] + cost[j, perm[i]]
            improving = swapped < current - _IMPROVEMENT_TOLERANCE * current
            hits = np.flatnonzero(improving)
            if hits.size == 0:
                break
            k = start + int(hits[0])
            perm[i], perm[k] = perm[k], perm[i]
            swaps += 1
            start = k + 1
    return swaps


def swapping_distance(
    a: EmpiricalMeasure,
    b: EmpiricalMeasure,
    p: float = 2.0,
    max_sweeps: int = SWAP_MAX_SWEEPS,
    bits: int = HILBERT_BITS,
) -> float:
    """
    Transport cost after greedy pair swaps starting from the Hilbert matching.

    Each sweep visits every pair once (O(n²) evaluations) and swaps the two
    assignments whenever that strictly lowers the total cost. Stops after a
    sweep without swaps or after max_sweeps sweeps.

    Args:
        a: First measure
        b: Second measure with the same n and d
        p: Order (>= 1)
        max_sweeps: Upper bound on full sweeps
        bits: Quantization bits of the initial Hilbert matching

    Returns:
        Final ((1/n) sum_i ||a_i - b_perm(i)||^p)^(1/p)
    """
    if not p >= 1.0:
        raise InvalidArgumentError(f"order must be >= 1, got {p}")
    if max_sweeps < 1:
        raise InvalidArgumentError(f"max_sweeps must be >= 1, got {max_sweeps}")
    order_a, order_b = hilbert_matching(a, b, bits)

    xa = a.points[order_a]
    xb = b.points[order_b]
    cost = cdist(xa, xb, metric="euclidean") ** p
    perm = np.arange(a.n)

    for sweep in range(1, max_sweeps + 1):
        swaps = _sweep(cost, perm)
        logger.debug(f"swapping sweep {sweep}: {swaps} swaps")
        if swaps == 0:
            break

    gaps = np.linalg.norm(xa - xb[perm], axis=1)
    return float(np.mean(gaps**p) ** (1.0 / p))
