"""Patch-based image denoising."""

from src.denoise.corpus import synthetic_corpus
from src.denoise.metrics import add_gaussian_noise, psnr
from src.denoise.nlmeans import nlmeans_classic
from src.denoise.patches import (
    build_dictionary,
    extract_patch,
    phi_labels,
    phi_map,
    reconstruct,
)
from src.denoise.pgm import pgm_read, pgm_write
from src.denoise.swabc import SwabcDenoiser, swabc_denoise

__all__ = [
    "extract_patch",
    "build_dictionary",
    "phi_map",
    "phi_labels",
    "reconstruct",
    "nlmeans_classic",
    "swabc_denoise",
    "SwabcDenoiser",
    "psnr",
    "add_gaussian_noise",
    "pgm_read",
    "pgm_write",
    "synthetic_corpus",
]
