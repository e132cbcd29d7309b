"""Denoise one image and score it against a clean reference."""

import time
from pathlib import Path
from typing import Any

import numpy as np
from loguru import logger

from src.denoise.metrics import add_gaussian_noise, psnr
from src.denoise.nlmeans import nlmeans_classic
from src.denoise.pgm import pgm_read, pgm_write
from src.denoise.swabc import SwabcDenoiser
from src.errors import UsageError
from src.experiments.storage import finite_or_label
from src.models.image import DenoiseParams, GrayImage
from src.models.run import DenoiseConfig

NOISE_STREAM = 0x6E6F6973


def noise_seed(seed: int) -> np.random.SeedSequence:
    """Noise stream kept apart from the denoiser streams of the same seed."""
    return np.random.SeedSequence([seed, NOISE_STREAM])


def denoise_image(
    noisy: GrayImage, method: str, params: DenoiseParams, workers: int | None = None
) -> tuple[GrayImage, int]:
    """Run one method; returns the image and the SW-ABC fallback count."""
    if method == "nlmeans":
        return nlmeans_classic(noisy, params), 0
    if method == "swabc":
        report = SwabcDenoiser(params, workers).denoise(noisy)
        return report.image, report.fallback_count
    raise UsageError(f"unknown denoising method {method!r}; expected nlmeans or swabc")


def run_denoise(cfg: DenoiseConfig, out: Path, workers: int | None = None) -> dict[str, Any]:
    """
    Read, optionally corrupt, denoise and write an image.

    With add_noise the input is treated as clean, corrupted with
    N(0, sigma²) seeded by params.seed and written to noisy.pgm. The input then
    doubles as the clean reference unless one is given.

    Args:
        cfg: Denoise command configuration
        out: Output directory for denoised.pgm and noisy.pgm
        workers: Thread cap

    Returns:
        Metrics: psnr_noisy, psnr_denoised, wall_clock_seconds, params, seed, fallback_count
    """
    if cfg.input is None:
        raise UsageError("denoise needs an input PGM")
    params = cfg.params
    source = pgm_read(cfg.input)
    clean = pgm_read(cfg.clean) if cfg.clean is not None else None

    if cfg.add_noise:
        noisy = add_gaussian_noise(source, params.sigma, noise_seed(params.seed))
        clean = clean or source
        pgm_write(noisy, out / "noisy.pgm")
    else:
        noisy = source

    if cfg.report_psnr and clean is None:
        raise UsageError("--report-psnr needs a clean reference (--clean or --add-noise)")
    if clean is not None and clean.shape != noisy.shape:
        raise UsageError(f"clean reference is {clean.shape}, input is {noisy.shape}")

    start = time.perf_counter()
    denoised, fallbacks = denoise_image(noisy, cfg.method, params, workers)
    elapsed = time.perf_counter() - start
    pgm_write(denoised, out / "denoised.pgm")

    metrics: dict[str, Any] = {
        "method": cfg.method,
        "psnr_noisy": None,
        "psnr_denoised": None,
        "wall_clock_seconds": elapsed,
        "params": params.model_dump(mode="json"),
        "seed": params.seed,
        "fallback_count": fallbacks,
    }
    if clean is not None:
        metrics["psnr_noisy"] = finite_or_label(psnr(clean, noisy))
        metrics["psnr_denoised"] = finite_or_label(psnr(clean, denoised))
        logger.info(
            f"{cfg.method}: PSNR {metrics['psnr_noisy']} dB -> {metrics['psnr_denoised']} dB "
            f"in {elapsed:.2f}s"
        )
    return metrics
