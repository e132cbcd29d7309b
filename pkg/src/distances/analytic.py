"""Closed-form OT distances between isotropic Gaussians."""

import math

from src.errors import InvalidArgumentError


def _check_scales(sigma_star: float, sigma: float, d: int) -> None:
    if sigma_star <= 0 or sigma <= 0:
        raise InvalidArgumentError(
            f"standard deviations must be positive, got {sigma_star} and {sigma}"
        )
    if d < 1:
        raise InvalidArgumentError(f"dimension must be >= 1, got {d}")


def gaussian_w2_analytic(sigma_star: float, sigma: float, d: int) -> float:
    """W_2 between N(0, sigma_star² I_d) and N(0, sigma² I_d): sqrt(d)|sigma_star - sigma|."""
    _check_scales(sigma_star, sigma, d)
    return math.sqrt(d) * abs(sigma_star - sigma)


def gaussian_sw2_oracle(sigma_star: float, sigma: float, d: int) -> float:
    """
    Population SW_2 between the same two Gaussians.

    Every unit-norm projection of N(0, sigma² I_d) is N(0, sigma²), so each
    sliced term is the 1D distance |sigma_star - sigma| whatever d is.
    """
    _check_scales(sigma_star, sigma, d)
    return abs(sigma_star - sigma)
