"""Experiment drivers behind the command line."""

from src.experiments.denoise_run import denoise_image, run_denoise
from src.experiments.distance_curve import distance_curve
from src.experiments.gaussian_bench import BenchOutcome, gaussian_bench

__all__ = ["distance_curve", "gaussian_bench", "BenchOutcome", "run_denoise", "denoise_image"]
