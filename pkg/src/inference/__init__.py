"""Likelihood-free posterior samplers."""

from src.inference.base import (
    BasePrior,
    BaseSimulator,
    Discrepancy,
    FunctionPrior,
    FunctionSimulator,
    UniformPrior,
)
from src.inference.diagnostics import population_frame, posterior_w1, write_population_csv
from src.inference.discrepancies import DISCREPANCY_NAMES, make_discrepancy, summary_discrepancy
from src.inference.rejection import rejection_abc
from src.inference.smc import SmcAbcSampler, smc_abc

__all__ = [
    "BasePrior",
    "BaseSimulator",
    "Discrepancy",
    "FunctionPrior",
    "FunctionSimulator",
    "UniformPrior",
    "rejection_abc",
    "smc_abc",
    "SmcAbcSampler",
    "posterior_w1",
    "population_frame",
    "write_population_csv",
    "make_discrepancy",
    "summary_discrepancy",
    "DISCREPANCY_NAMES",
]
