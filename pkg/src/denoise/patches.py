"""Periodic patch extraction, the dictionary map phi and patch aggregation."""

import numpy as np
from loguru import logger
from scipy.spatial.distance import cdist

from src.errors import InvalidArgumentError
from src.models.image import GrayImage, Patch, PatchDictionary

# Rows of the pixel grid compared against the dictionary at once
_PHI_CHUNK = 4096


def _check_radius(r: int) -> None:
    if r < 0:
        raise InvalidArgumentError(f"patch radius must be >= 0, got {r}")


def patches_at(pixels: np.ndarray, positions: np.ndarray, r: int) -> np.ndarray:
    """
    Flattened periodic patches centred at the given positions.

    Args:
        pixels: M x N raster
        positions: K x 2 integer (row, col) positions, any integers allowed
        r: Patch radius

    Returns:
        K x (2r+1)² array, row-major within each patch
    """
    _check_radius(r)
    height, width = pixels.shape
    offsets = np.arange(-r, r + 1)
    positions = np.asarray(positions, dtype=np.int64).reshape(-1, 2)
    rows = (positions[:, 0, None] + offsets) % height
    cols = (positions[:, 1, None] + offsets) % width
    side = 2 * r + 1
    return pixels[rows[:, :, None], cols[:, None, :]].reshape(len(positions), side * side)


def grid_positions(shape: tuple[int, int]) -> np.ndarray:
    """All (row, col) positions in row-major order."""
    rows, cols = np.indices(shape)
    return np.column_stack([rows.ravel(), cols.ravel()])


def extract_patch(img: GrayImage, i: tuple[int, int], r: int) -> Patch:
    """Patch P(k) = img(i + k) for k in {-r..r}², wrapping periodically."""
    side = 2 * r + 1
    values = patches_at(img.pixels, np.array([i]), r).reshape(side, side)
    return Patch(values=values, center=(int(i[0]), int(i[1])))


def build_dictionary(img: GrayImage, dict_size: int, r: int, seed: int | None = None) -> PatchDictionary:
    """
    Sample dict_size distinct anchor positions uniformly without replacement.

    Positions are stored in lexicographic (row, col) order.
    """
    total = img.height * img.width
    if not 1 <= dict_size <= total:
        raise InvalidArgumentError(f"dict_size must be in [1, {total}], got {dict_size}")
    rng = np.random.default_rng(seed)
    flat = np.sort(rng.choice(total, size=dict_size, replace=False))
    positions = np.column_stack(np.unravel_index(flat, img.shape))
    return PatchDictionary(
        positions=positions,
        patches=patches_at(img.pixels, positions, r),
        radius=r,
        seed=seed,
    )


def phi_labels(img: GrayImage, dictionary: PatchDictionary) -> np.ndarray:
    """
    Nearest dictionary entry of every pixel's patch.

    Ties go to the first entry, which is the lexicographically smallest position.

    Returns:
        M x N array of indices into dictionary.positions
    """
    patches = patches_at(img.pixels, grid_positions(img.shape), dictionary.radius)
    labels = np.empty(len(patches), dtype=np.int64)
    for lo in range(0, len(patches), _PHI_CHUNK):
        chunk = patches[lo : lo + _PHI_CHUNK]
        labels[lo : lo + len(chunk)] = cdist(chunk, dictionary.patches, "sqeuclidean").argmin(axis=1)
    logger.debug(f"phi: {len(np.unique(labels))}/{dictionary.size} anchors with non-empty clusters")
    return labels.reshape(img.shape)


def phi_map(i: tuple[int, int], dictionary: PatchDictionary, img: GrayImage, r: int) -> tuple[int, int]:
    """Dictionary position whose patch is closest to P_i."""
    patch = patches_at(img.pixels, np.array([i]), r)
    index = int(cdist(patch, dictionary.patches, "sqeuclidean").argmin())
    row, col = dictionary.positions[index]
    return int(row), int(col)


def reconstruct(estimates: np.ndarray, labels: np.ndarray, r: int) -> np.ndarray:
    """
    Aggregate restored patches into pixels.

    u(i) = (2r+1)^-2 sum over k with |k - i|_inf <= r of estimates[labels(k)](i - k).

    Args:
        estimates: |D| x (2r+1)² restored patches
        labels: M x N dictionary index of every pixel
        r: Patch radius

    Returns:
        M x N raster
    """
    side = 2 * r + 1
    out = np.zeros(labels.shape, dtype=np.float64)
    for flat_offset in range(side * side):
        dy, dx = divmod(flat_offset, side)
        # Value pixel k contributes to k + (dy - r, dx - r)
        contribution = estimates[labels, flat_offset]
        out += np.roll(contribution, shift=(dy - r, dx - r), axis=(0, 1))
    return out / (side * side)
