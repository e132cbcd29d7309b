"""Mean PSNR of each denoiser per noise level over an image corpus."""

from pathlib import Path

import numpy as np
import pandas as pd
from loguru import logger

from src.config.constants import REFERENCE_PSNR
from src.denoise.metrics import add_gaussian_noise, psnr
from src.denoise.pgm import pgm_read
from src.experiments.denoise_run import denoise_image
from src.models.image import DenoiseParams, GrayImage

PSNR_COLUMNS = ["image", "sigma", "method", "psnr_noisy", "psnr_denoised"]


def load_corpus(directory: str | Path) -> dict[str, GrayImage]:
    """Every *.pgm file in a directory, keyed by file stem."""
    paths = sorted(Path(directory).glob("*.pgm"))
    if not paths:
        raise FileNotFoundError(f"no .pgm images in {directory}")
    return {path.stem: pgm_read(path) for path in paths}


def psnr_table(
    images: dict[str, GrayImage],
    sigmas: list[float],
    methods: list[str],
    base_params: DenoiseParams | None = None,
    seed: int = 0,
    workers: int | None = None,
) -> pd.DataFrame:
    """
    Corrupt each image at each sigma, denoise with each method and score it.

    Noise depends on (seed, image index, sigma index) only, so every method
    sees the same noisy input.

    Returns:
        One row per (image, sigma, method) with PSNR_COLUMNS
    """
    base = base_params or DenoiseParams()
    rows = []
    for k, (name, clean) in enumerate(images.items()):
        for s, sigma in enumerate(sigmas):
            noisy = add_gaussian_noise(clean, sigma, np.random.SeedSequence([seed, k, s]))
            params = base.model_copy(update={"sigma": float(sigma), "seed": seed})
            for method in methods:
                denoised, _ = denoise_image(noisy, method, params, workers)
                rows.append(
                    {
                        "image": name,
                        "sigma": float(sigma),
                        "method": method,
                        "psnr_noisy": psnr(clean, noisy),
                        "psnr_denoised": psnr(clean, denoised),
                    }
                )
                logger.debug(f"{name} sigma={sigma:g} {method}: {rows[-1]['psnr_denoised']:.2f} dB")
    return pd.DataFrame(rows, columns=PSNR_COLUMNS)


def summarize(table: pd.DataFrame) -> pd.DataFrame:
    """Mean PSNR per (sigma, method) next to the reference values."""
    summary = (
        table.groupby(["sigma", "method"], as_index=False)[["psnr_noisy", "psnr_denoised"]]
        .mean()
        .sort_values(["sigma", "method"], ignore_index=True)
    )
    summary["reference"] = [
        REFERENCE_PSNR.get(method, {}).get(int(sigma), np.nan)
        for sigma, method in zip(summary["sigma"], summary["method"])
    ]
    return summary
