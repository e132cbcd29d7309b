"""Pydantic models for measures, samplers, images and runs."""

from src.models.gaussian import GaussianScaleModel, InverseGamma
from src.models.image import DenoiseParams, DenoiseReport, GrayImage, Patch, PatchDictionary
from src.models.inference import (
    AbcConfig,
    Particle,
    Population,
    RejectionResult,
    SmcResult,
    StopReason,
)
from src.models.measure import DistanceConfig, EmpiricalMeasure, KlEstimate, ProjectionSet
from src.models.run import RunConfig

__all__ = [
    "EmpiricalMeasure",
    "ProjectionSet",
    "DistanceConfig",
    "KlEstimate",
    "AbcConfig",
    "Particle",
    "Population",
    "RejectionResult",
    "SmcResult",
    "StopReason",
    "GaussianScaleModel",
    "InverseGamma",
    "GrayImage",
    "Patch",
    "PatchDictionary",
    "DenoiseParams",
    "DenoiseReport",
    "RunConfig",
]
