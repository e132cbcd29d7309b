"""Discrepancies between empirical measures."""

from src.distances.analytic import gaussian_sw2_oracle, gaussian_w2_analytic
from src.distances.hilbert import hilbert_distance, hilbert_index, hilbert_matching, hilbert_order
from src.distances.kl import knn_kl_estimate
from src.distances.swapping import swapping_distance
from src.distances.wasserstein import sample_projections, sliced_wasserstein, wasserstein_1d

__all__ = [
    "wasserstein_1d",
    "sample_projections",
    "sliced_wasserstein",
    "hilbert_index",
    "hilbert_order",
    "hilbert_matching",
    "hilbert_distance",
    "swapping_distance",
    "knn_kl_estimate",
    "gaussian_w2_analytic",
    "gaussian_sw2_oracle",
]
