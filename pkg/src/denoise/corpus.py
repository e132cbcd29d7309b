"""Deterministic synthetic gray-level test images."""

from collections.abc import Callable

import numpy as np
from scipy.ndimage import gaussian_filter

from src.models.image import GrayImage

CORPUS_SIZE = 128


def _grid(size: int) -> tuple[np.ndarray, np.ndarray]:
    y, x = np.mgrid[0:size, 0:size].astype(np.float64)
    return y / size, x / size


def texture(size: int = CORPUS_SIZE, seed: int = 7) -> GrayImage:
    """Smoothed white noise, a stand-in for natural texture."""
    rng = np.random.default_rng(seed)
    field = gaussian_filter(rng.standard_normal((size, size)), sigma=2.0, mode="wrap")
    field = (field - field.min()) / (field.max() - field.min())
    return GrayImage(pixels=40.0 + 175.0 * field)


def stripes(size: int = CORPUS_SIZE, period: int = 16) -> GrayImage:
    """Diagonal sinusoidal stripes."""
    y, x = np.mgrid[0:size, 0:size].astype(np.float64)
    return GrayImage(pixels=128.0 + 90.0 * np.sin(2.0 * np.pi * (x + y) / period))


def rings(size: int = CORPUS_SIZE) -> GrayImage:
    """Concentric rings of increasing frequency."""
    y, x = _grid(size)
    radius = np.hypot(y - 0.5, x - 0.5)
    return GrayImage(pixels=128.0 + 100.0 * np.cos(40.0 * radius**2 * np.pi))


def checkerboard(size: int = CORPUS_SIZE, cell: int = 16) -> GrayImage:
    """Two-level checkerboard."""
    y, x = np.mgrid[0:size, 0:size]
    board = ((y // cell) + (x // cell)) % 2
    return GrayImage(pixels=np.where(board == 1, 200.0, 60.0))


def blobs(size: int = CORPUS_SIZE, seed: int = 11, count: int = 12) -> GrayImage:
    """Sum of smooth Gaussian bumps."""
    rng = np.random.default_rng(seed)
    y, x = _grid(size)
    field = np.zeros((size, size))
    for cy, cx, width, height in zip(
        rng.uniform(0, 1, count), rng.uniform(0, 1, count),
        rng.uniform(0.04, 0.15, count), rng.uniform(-1.0, 1.0, count),
    ):
        field += height * np.exp(-((y - cy) ** 2 + (x - cx) ** 2) / (2.0 * width**2))
    field = (field - field.min()) / (field.max() - field.min())
    return GrayImage(pixels=30.0 + 195.0 * field)


CORPUS: dict[str, Callable[[], GrayImage]] = {
    "texture": texture,
    "stripes": stripes,
    "rings": rings,
    "checkerboard": checkerboard,
    "blobs": blobs,
}


def synthetic_corpus() -> dict[str, GrayImage]:
    """The five 128x128 corpus images by name."""
    return {name: make() for name, make in CORPUS.items()}
