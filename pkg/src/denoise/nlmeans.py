"""Classical NL-means with periodic boundaries."""

import numpy as np
from loguru import logger
from scipy.ndimage import uniform_filter

from src.errors import InvalidArgumentError
from src.models.image import DenoiseParams, GrayImage


def _offset_weights(
    pixels: np.ndarray, dy: int, dx: int, side: int, h: float, patch_average: bool
) -> np.ndarray:
    """w(k, k + o) = exp(-||P_k - P_{k+o}||² / (2h²)) for every k."""
    shifted = np.roll(pixels, shift=(-dy, -dx), axis=(0, 1))
    dist = uniform_filter((pixels - shifted) ** 2, size=side, mode="wrap")
    if not patch_average:
        dist = dist * (side * side)
    return np.exp(-np.maximum(dist, 0.0) / (2.0 * h * h))


def nlmeans_classic(v: GrayImage, params: DenoiseParams) -> GrayImage:
    """
    Patch-wise NL-means.

    Every pixel's patch is restored as the weighted mean of the patches in its
    search window, with weights exp(-||P_i - P_j||² / (2h²)), then each pixel
    averages the (2r+1)² restored patches that cover it. With
    ``params.patch_average`` the squared distance is divided by the patch
    area, which puts h on the scale of the noise level.

    Args:
        v: Noisy image
        params: Uses r, search_window, sigma, h (defaults to sigma) and patch_average

    Returns:
        Denoised image clamped to [0, 255]
    """
    h = params.strength
    if not h > 0:
        raise InvalidArgumentError(f"filtering strength must be positive, got {h}")
    pixels = v.pixels
    side = 2 * params.r + 1
    half = params.search_window
    average = params.patch_average
    offsets = [(dy, dx) for dy in range(-half, half + 1) for dx in range(-half, half + 1)]
    logger.debug(
        f"NL-means on {v.height}x{v.width}: r={params.r}, W={half}, h={h:g}, "
        f"patch_average={average}"
    )

    # First pass: normaliser Z(k) of each patch's weights
    total = np.zeros_like(pixels)
    for dy, dx in offsets:
        total += _offset_weights(pixels, dy, dx, side, h, average)

    # Second pass: u(x) = sum_o box_mean(w_o / Z)(x) * v(x + o)
    out = np.zeros_like(pixels)
    for dy, dx in offsets:
        share = _offset_weights(pixels, dy, dx, side, h, average) / total
        out += uniform_filter(share, size=side, mode="wrap") * np.roll(
            pixels, shift=(-dy, -dx), axis=(0, 1)
        )
    return GrayImage.clamped(out)
