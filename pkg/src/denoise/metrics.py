"""Image quality metric and the noise corruption protocol."""

import numpy as np

from src.config.constants import PIXEL_MAX
from src.errors import InvalidArgumentError
from src.models.image import GrayImage


def psnr(u: GrayImage, u_hat: GrayImage) -> float:
    """
    Peak signal-to-noise ratio -10 log10(||u - u_hat||² / (255² N M)) in dB.

    Identical images give +inf.
    """
    if u.shape != u_hat.shape:
        raise InvalidArgumentError(f"image sizes differ: {u.shape} vs {u_hat.shape}")
    mse = float(np.mean((u.pixels - u_hat.pixels) ** 2))
    if mse == 0.0:
        return float("inf")
    # + 0.0 turns -0.0 into 0.0 for the all-black vs all-white case
    return float(-10.0 * np.log10(mse / PIXEL_MAX**2)) + 0.0


def add_gaussian_noise(
    img: GrayImage, sigma: float, seed: int | np.random.SeedSequence | None = None
) -> GrayImage:
    """Add i.i.d. N(0, sigma²) noise per pixel and clamp to [0, 255]."""
    if sigma < 0:
        raise InvalidArgumentError(f"noise level must be >= 0, got {sigma}")
    rng = np.random.default_rng(seed)
    return GrayImage.clamped(img.pixels + sigma * rng.standard_normal(img.shape))
