#!/usr/bin/env python3
"""Mean PSNR of NL-means and SW-ABC NL-means over a directory of gray images."""

import argparse
from pathlib import Path

from loguru import logger

from src.config.logging_config import setup_logging
from src.denoise.corpus import synthetic_corpus
from src.experiments.psnr_table import load_corpus, psnr_table, summarize
from src.experiments.storage import write_csv
from src.models.image import DenoiseParams


def run_corpus(
    images_dir: Path | None,
    sigmas: list[float],
    methods: list[str],
    seed: int,
    out: Path,
    tolerance: float,
    patch_average: bool = False,
) -> bool:
    """
    Score both denoisers and check the reference ordering.

    Args:
        images_dir: Directory of PGM images; the synthetic corpus if None
        sigmas: Noise levels
        methods: Denoisers to run
        seed: Noise and denoiser seed
        out: Output directory for psnr.csv and psnr-summary.csv
        tolerance: Allowed gap in dB to the reference values (real corpus only)
        patch_average: Average NL-means patch distances over the patch area

    Returns:
        True when every check passed
    """
    setup_logging(command="psnr-corpus")
    images = load_corpus(images_dir) if images_dir else synthetic_corpus()
    logger.info(f"Scoring {len(images)} images at sigma={sigmas} with {methods}")

    params = DenoiseParams(patch_average=patch_average)
    table = psnr_table(images, sigmas, methods, base_params=params, seed=seed)
    summary = summarize(table)
    write_csv(table, out / "psnr.csv")
    write_csv(summary, out / "psnr-summary.csv")

    logger.info("=" * 50)
    logger.info("MEAN PSNR (dB)")
    logger.info("=" * 50)
    for row in summary.itertuples():
        logger.info(
            f"sigma={row.sigma:>4g} {row.method:<8} noisy={row.psnr_noisy:6.2f} "
            f"denoised={row.psnr_denoised:6.2f} reference={row.reference:6.2f}"
        )
    logger.info("=" * 50)

    ok = True
    means = summary.set_index(["sigma", "method"])["psnr_denoised"]
    if {"nlmeans", "swabc"} <= set(methods):
        if 10 in sigmas and means[(10.0, "nlmeans")] < means[(10.0, "swabc")]:
            logger.warning("NL-means is below SW-ABC at sigma=10")
            ok = False
        if 50 in sigmas and means[(50.0, "swabc")] < means[(50.0, "nlmeans")]:
            logger.warning("SW-ABC is below NL-means at sigma=50")
            ok = False
    if images_dir:
        gaps = (summary["psnr_denoised"] - summary["reference"]).abs().dropna()
        if (gaps > tolerance).any():
            logger.warning(f"largest gap to the reference values: {gaps.max():.2f} dB")
            ok = False
    logger.info("All checks passed" if ok else "Some checks failed")
    return ok


def main() -> None:
    """Main entry point for corpus scoring."""
    parser = argparse.ArgumentParser(description="Mean PSNR of both denoisers over a corpus")
    parser.add_argument(
        "--images",
        type=Path,
        default=None,
        help="Directory of gray PGM images (default: synthetic 128x128 corpus)",
    )
    parser.add_argument(
        "--sigmas",
        nargs="+",
        type=float,
        default=[10.0, 20.0, 30.0, 50.0],
        help="Noise standard deviations",
    )
    parser.add_argument(
        "--methods",
        nargs="+",
        choices=["nlmeans", "swabc"],
        default=["nlmeans", "swabc"],
        help="Denoisers",
    )
    parser.add_argument("--seed", type=int, default=0, help="Seed")
    parser.add_argument("--out", type=Path, default=Path("out/psnr-corpus"), help="Output directory")
    parser.add_argument(
        "--tolerance", type=float, default=0.5, help="Allowed gap to reference values in dB"
    )
    parser.add_argument(
        "--patch-average",
        action="store_true",
        help="Average NL-means patch distances over the patch area",
    )

    args = parser.parse_args()
    ok = run_corpus(
        args.images,
        args.sigmas,
        args.methods,
        args.seed,
        args.out,
        args.tolerance,
        args.patch_average,
    )
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
