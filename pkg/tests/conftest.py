"""Pytest configuration and fixtures."""

from pathlib import Path

import numpy as np
import pytest

from src.benchmark.gaussian_scale import gaussian_scale_simulate, make_gaussian_model
from src.config.settings import settings
from src.denoise.pgm import pgm_write
from src.models.gaussian import GaussianScaleModel
from src.models.image import GrayImage
from src.models.measure import EmpiricalMeasure


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for test data."""
    return np.random.default_rng(12345)


@pytest.fixture
def small_pair(rng: np.random.Generator) -> tuple[EmpiricalMeasure, EmpiricalMeasure]:
    """Two 2-D measures with 50 points each."""
    a = EmpiricalMeasure(points=rng.normal(size=(50, 2)))
    b = EmpiricalMeasure(points=rng.normal(loc=1.0, scale=1.5, size=(50, 2)))
    return a, b


@pytest.fixture
def gaussian_model_1d() -> GaussianScaleModel:
    """One-dimensional Gaussian scale model with m* = 0."""
    return GaussianScaleModel(dim=1, mean=[0.0])


@pytest.fixture
def gaussian_observed_1d(gaussian_model_1d: GaussianScaleModel) -> EmpiricalMeasure:
    """100 observations from N(0, 4)."""
    return gaussian_scale_simulate(gaussian_model_1d, 4.0, 100, seed=7)


@pytest.fixture
def gaussian_model_2d() -> GaussianScaleModel:
    """Two-dimensional benchmark model."""
    return make_gaussian_model(2, seed=3)


@pytest.fixture
def constant_image() -> GrayImage:
    """24 x 24 image of value 100."""
    return GrayImage(pixels=np.full((24, 24), 100.0))


@pytest.fixture
def checkerboard_image() -> GrayImage:
    """64 x 64 checkerboard with 8-pixel cells."""
    y, x = np.mgrid[0:64, 0:64]
    return GrayImage(pixels=np.where(((y // 8) + (x // 8)) % 2 == 1, 190.0, 60.0))


@pytest.fixture
def random_image(rng: np.random.Generator) -> GrayImage:
    """12 x 16 image of uniform noise."""
    return GrayImage(pixels=rng.uniform(0.0, 255.0, size=(12, 16)))


@pytest.fixture
def pgm_file(tmp_path: Path, checkerboard_image: GrayImage) -> Path:
    """Checkerboard written as a P5 file."""
    path = tmp_path / "board.pgm"
    pgm_write(checkerboard_image, path)
    return path


@pytest.fixture
def many_threads(monkeypatch: pytest.MonkeyPatch) -> int:
    """Raise the worker cap so thread-count comparisons are meaningful."""
    monkeypatch.setattr(settings, "SWABC_THREADS", 8)
    return 8
