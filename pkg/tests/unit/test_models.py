"""Unit tests for Pydantic models."""

import json
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from src.models.gaussian import GaussianScaleModel, InverseGamma
from src.models.image import DenoiseParams, GrayImage, Patch, PatchDictionary
from src.models.inference import AbcConfig, Particle, Population, SmcResult, StopReason
from src.models.measure import EmpiricalMeasure, ProjectionSet
from src.models.run import RunConfig


class TestEmpiricalMeasure:
    """Tests for EmpiricalMeasure."""

    def test_vector_becomes_column(self) -> None:
        """A 1-D array is n points in R^1."""
        measure = EmpiricalMeasure(points=[1.0, 2.0, 3.0])
        assert measure.n == 3
        assert measure.d == 1

    def test_empty_rejected(self) -> None:
        """At least one point is required."""
        with pytest.raises(ValidationError):
            EmpiricalMeasure(points=np.empty((0, 2)))

    def test_non_finite_rejected(self) -> None:
        """NaN and Inf are rejected."""
        with pytest.raises(ValidationError):
            EmpiricalMeasure(points=[[0.0, np.inf]])

    def test_csv_round_trip(self, tmp_path: Path, rng: np.random.Generator) -> None:
        """Headerless CSV preserves every bit."""
        measure = EmpiricalMeasure(points=rng.normal(size=(7, 3)))
        path = tmp_path / "points.csv"
        measure.to_csv(path)
        assert np.array_equal(EmpiricalMeasure.from_csv(path).points, measure.points)


class TestProjectionSet:
    """Tests for ProjectionSet."""

    def test_non_unit_rejected(self) -> None:
        """Directions must have unit norm."""
        with pytest.raises(ValidationError):
            ProjectionSet(directions=[[1.0, 1.0]])

    def test_shape(self) -> None:
        """L and d come from the array shape."""
        projections = ProjectionSet(directions=[[1.0, 0.0], [0.0, -1.0], [0.6, 0.8]])
        assert projections.L == 3
        assert projections.d == 2


class TestInverseGamma:
    """Tests for InverseGamma."""

    def test_moments(self) -> None:
        """Closed-form mean, variance and mode."""
        ig = InverseGamma(shape=3.0, rate=2.0)
        assert ig.mean == pytest.approx(1.0)
        assert ig.variance == pytest.approx(1.0)
        assert ig.mode == pytest.approx(0.5)

    def test_heavy_tail_moments(self) -> None:
        """Moments are infinite when they do not exist."""
        ig = InverseGamma(shape=1.0, rate=1.0)
        assert ig.mean == float("inf")
        assert ig.variance == float("inf")

    def test_log_pdf(self) -> None:
        """log density of IG(1, 1) at 1 is -1."""
        assert InverseGamma(shape=1.0, rate=1.0).log_pdf(1.0) == pytest.approx(-1.0)

    def test_invalid_parameters(self) -> None:
        """Shape and rate must be positive."""
        with pytest.raises(ValidationError):
            InverseGamma(shape=0.0, rate=1.0)


class TestGaussianScaleModel:
    """Tests for GaussianScaleModel."""

    def test_mean_length_checked(self) -> None:
        """The mean vector has d entries."""
        with pytest.raises(ValidationError):
            GaussianScaleModel(dim=3, mean=[0.0, 1.0])

    def test_positive_variance(self) -> None:
        """sigma_star_sq > 0."""
        with pytest.raises(ValidationError):
            GaussianScaleModel(dim=1, mean=[0.0], sigma_star_sq=0.0)


class TestSamplerModels:
    """Tests for AbcConfig, Population and SmcResult."""

    def test_config_needs_a_limit(self) -> None:
        """At least one stopping condition is finite."""
        with pytest.raises(ValidationError):
            AbcConfig(max_generations=None)

    def test_config_alpha_range(self) -> None:
        """quantile_alpha lies strictly inside (0, 1)."""
        with pytest.raises(ValidationError):
            AbcConfig(quantile_alpha=1.0)

    def test_population_weights_sum_to_one(self) -> None:
        """Weights summing away from 1 are rejected."""
        particles = [Particle(theta=[1.0], weight=0.5, distance=0.1)]
        with pytest.raises(ValidationError):
            Population(particles=particles, epsilon=1.0, generation=0, acceptance_rate=1.0)

    def test_population_distance_bound(self) -> None:
        """Distances above epsilon are rejected."""
        particles = [Particle(theta=[1.0], weight=1.0, distance=2.0)]
        with pytest.raises(ValidationError):
            Population(particles=particles, epsilon=1.0, generation=0, acceptance_rate=1.0)

    def test_population_views(self) -> None:
        """Array views and effective sample size."""
        particles = [
            Particle(theta=[1.0], weight=0.25, distance=0.1),
            Particle(theta=[2.0], weight=0.75, distance=0.2),
        ]
        pop = Population(particles=particles, epsilon=0.2, generation=1, acceptance_rate=0.5)
        assert pop.thetas.shape == (2, 1)
        assert pop.effective_sample_size == pytest.approx(1.0 / (0.0625 + 0.5625))
        result = SmcResult(populations=[pop], stop_reason=StopReason.TIME_BUDGET)
        assert result.budget_exhausted
        assert result.epsilons == [0.2]


class TestImageModels:
    """Tests for image models."""

    def test_pixel_range(self) -> None:
        """Pixels lie in [0, 255]."""
        with pytest.raises(ValidationError):
            GrayImage(pixels=[[0.0, 256.0]])

    def test_periodic_access(self) -> None:
        """Pixel access wraps around both axes."""
        img = GrayImage(pixels=np.arange(12.0).reshape(3, 4))
        assert img.at(-1, -1) == 11.0
        assert img.at(3, 5) == 1.0

    def test_clamped(self) -> None:
        """Out-of-range values are clamped."""
        img = GrayImage.clamped(np.array([[-3.0, 300.0]]))
        assert img.pixels.tolist() == [[0.0, 255.0]]

    def test_patch_must_be_odd_square(self) -> None:
        """Patch sides are odd."""
        with pytest.raises(ValidationError):
            Patch(values=np.zeros((2, 2)), center=(0, 0))

    def test_dictionary_positions_distinct(self) -> None:
        """Duplicate anchors are rejected."""
        with pytest.raises(ValidationError):
            PatchDictionary(
                positions=np.array([[0, 0], [0, 0]]), patches=np.zeros((2, 1)), radius=0
            )

    def test_default_denoise_params(self) -> None:
        """Defaults follow the published settings."""
        params = DenoiseParams()
        assert (params.r, params.search_window, params.dict_size) == (3, 10, 1000)
        assert (params.T, params.S, params.m) == (10, 10, 10)
        assert params.tolerance == 49.0
        assert params.strength == params.sigma
        assert params.proposal_cap == 500


class TestRunConfig:
    """Tests for RunConfig."""

    def test_from_json_with_override(self, tmp_path: Path) -> None:
        """File values load and keyword overrides win."""
        path = tmp_path / "run.json"
        path.write_text(
            json.dumps({"command": "distance-curve", "seed": 4, "distance_curve": {"dim": 10}})
        )
        cfg = RunConfig.from_json(path, seed=9)
        assert cfg.seed == 9
        assert cfg.distance_curve.dim == 10

    def test_sidecar_holds_active_section(self) -> None:
        """The sidecar carries the command's own configuration."""
        sidecar = RunConfig(command="gaussian-bench").sidecar()
        assert sidecar["command"] == "gaussian-bench"
        assert sidecar["gaussian_bench"]["num_particles"] == 1000

    def test_unknown_command(self) -> None:
        """Only the four commands are accepted."""
        with pytest.raises(ValidationError):
            RunConfig(command="plot")
