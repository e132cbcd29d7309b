"""Benchmark models with known posteriors."""

from src.benchmark.gaussian_scale import (
    GaussianScaleSimulator,
    InverseGammaPrior,
    gaussian_scale_simulate,
    ig_sample,
    make_gaussian_model,
    sample_variance_summary,
    true_posterior,
)

__all__ = [
    "ig_sample",
    "make_gaussian_model",
    "gaussian_scale_simulate",
    "true_posterior",
    "sample_variance_summary",
    "InverseGammaPrior",
    "GaussianScaleSimulator",
]
