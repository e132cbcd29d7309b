"""Hilbert space-filling curve indices and the Hilbert matching distance."""

from collections.abc import Sequence

import numpy as np

from src.config.constants import HILBERT_BITS, HILBERT_BOX_MARGIN, HILBERT_MAX_INDEX_BITS
from src.errors import InvalidArgumentError
from src.models.measure import EmpiricalMeasure

_WORD_BITS = 63


def _transpose(coords: np.ndarray, bits: int) -> np.ndarray:
    """
    Skilling's axes-to-transpose transform applied to every row.

    The returned array holds the Hilbert index in "transposed" form: bit b of
    column i is bit (b * d + d - 1 - i) of the index.

    Args:
        coords: n x d array of integers in [0, 2^bits)
        bits: Bits per coordinate

    Returns:
        n x d uint64 array
    """
    x = coords.astype(np.uint64, copy=True)
    d = x.shape[1]
    one = np.uint64(1)
    top = one << np.uint64(bits - 1)

    # Inverse undo
    q = top
    while q > one:
        low = q - one
        for i in range(d):
            flip = (x[:, i] & q) != 0
            x[flip, 0] ^= low
            keep = ~flip
            t = (x[keep, 0] ^ x[keep, i]) & low
            x[keep, 0] ^= t
            x[keep, i] ^= t
        q >>= one

    # Gray encode
    for i in range(1, d):
        x[:, i] ^= x[:, i - 1]
    t = np.zeros(x.shape[0], dtype=np.uint64)
    q = top
    while q > one:
        t[(x[:, d - 1] & q) != 0] ^= q - one
        q >>= one
    x ^= t[:, None]
    return x


def _check_cells(coords: np.ndarray, bits: int) -> None:
    if bits < 1:
        raise InvalidArgumentError(f"bits per coordinate must be >= 1, got {bits}")
    if coords.ndim != 2 or coords.shape[1] < 1:
        raise InvalidArgumentError(f"expected an n x d array of cells, got shape {coords.shape}")
    if coords.size and (coords.min() < 0 or coords.max() >= 2**bits):
        raise InvalidArgumentError(f"cell coordinates must lie in [0, {2**bits})")


def hilbert_index(point: Sequence[int], bits: int = HILBERT_BITS) -> int:
    """
    Position of a grid cell along the d-dimensional Hilbert curve of order k.

    Args:
        point: d integer coordinates in [0, 2^bits)
        bits: Bits per coordinate k (k * d <= 62)

    Returns:
        Index in [0, 2^(k d))
    """
    coords = np.asarray(point)
    if coords.ndim != 1 or coords.size < 1:
        raise InvalidArgumentError("point must be a non-empty sequence of integers")
    if not np.issubdtype(coords.dtype, np.integer):
        raise InvalidArgumentError("Hilbert cells must have integer coordinates")
    d = coords.size
    if bits * d > HILBERT_MAX_INDEX_BITS:
        raise InvalidArgumentError(f"bits * d = {bits * d} exceeds {HILBERT_MAX_INDEX_BITS}")
    coords = coords.astype(np.int64)[None, :]
    _check_cells(coords, bits)
    if d == 1:
        return int(coords[0, 0])

    transposed = _transpose(coords, bits)[0]
    index = 0
    for level in range(bits - 1, -1, -1):
        for i in range(d):
            index = (index << 1) | int((transposed[i] >> np.uint64(level)) & np.uint64(1))
    return index


def hilbert_order(coords: np.ndarray, bits: int = HILBERT_BITS) -> np.ndarray:
    """
    Stable argsort of grid cells along the Hilbert curve, in any dimension.

    The k * d bit index is split into 63-bit words compared lexicographically,
    so there is no limit on k * d.

    Args:
        coords: n x d array of integers in [0, 2^bits)
        bits: Bits per coordinate

    Returns:
        Permutation sorting the rows by Hilbert index
    """
    coords = np.asarray(coords, dtype=np.int64)
    _check_cells(coords, bits)
    n, d = coords.shape
    if d == 1:
        return np.argsort(coords[:, 0], kind="stable")

    transposed = _transpose(coords, bits)
    words: list[np.ndarray] = []
    word = np.zeros(n, dtype=np.uint64)
    filled = 0
    one = np.uint64(1)
    for level in range(bits - 1, -1, -1):
        shift = np.uint64(level)
        for i in range(d):
            word = (word << one) | ((transposed[:, i] >> shift) & one)
            filled += 1
            if filled == _WORD_BITS:
                words.append(word)
                word = np.zeros(n, dtype=np.uint64)
                filled = 0
    if filled:
        words.append(word)
    # lexsort treats its last key as the primary one
    return np.lexsort(words[::-1])


def quantize(points: np.ndarray, lo: np.ndarray, hi: np.ndarray, bits: int) -> np.ndarray:
    """Map points of the box [lo, hi] onto the integer grid [0, 2^bits)^d."""
    cells = 2**bits
    scaled = np.floor((points - lo) / (hi - lo) * cells)
    return np.clip(scaled, 0, cells - 1).astype(np.int64)


def hilbert_matching(
    a: EmpiricalMeasure, b: EmpiricalMeasure, bits: int = HILBERT_BITS
) -> tuple[np.ndarray, np.ndarray]:
    """
    Sort both datasets along the Hilbert curve of their joint bounding box.

    Args:
        a: First measure
        b: Second measure (same n and d as a)
        bits: Quantization bits per coordinate

    Returns:
        Tuple of (order of a, order of b); a[order_a[i]] is matched to b[order_b[i]]
    """
    if a.d != b.d:
        raise InvalidArgumentError(f"dimension mismatch: {a.d} vs {b.d}")
    if a.n != b.n:
        raise InvalidArgumentError(
            f"Hilbert matching needs equal sample counts, got {a.n} and {b.n}"
        )
    if a.d == 1:
        # The one-dimensional curve is the natural order
        return (
            np.argsort(a.points[:, 0], kind="stable"),
            np.argsort(b.points[:, 0], kind="stable"),
        )

    joint = np.vstack([a.points, b.points])
    lo = joint.min(axis=0)
    hi = joint.max(axis=0)
    span = hi - lo
    margin = HILBERT_BOX_MARGIN * np.where(span > 0, span, 1.0)
    lo, hi = lo - margin, hi + margin
    order_a = hilbert_order(quantize(a.points, lo, hi, bits), bits)
    order_b = hilbert_order(quantize(b.points, lo, hi, bits), bits)
    return order_a, order_b


def hilbert_distance(
    a: EmpiricalMeasure, b: EmpiricalMeasure, p: float = 2.0, bits: int = HILBERT_BITS
) -> float:
    """
    Transport cost of the Hilbert-sort coupling, an upper bound on W_p.

    Args:
        a: First measure
        b: Second measure with the same n and d
        p: Order (>= 1)
        bits: Quantization bits per coordinate

    Returns:
        ((1/n) sum_i ||a_(i) - b_(i)||^p)^(1/p) on the original points
    """
    if not p >= 1.0:
        raise InvalidArgumentError(f"order must be >= 1, got {p}")
    order_a, order_b = hilbert_matching(a, b, bits)
    gaps = np.linalg.norm(a.points[order_a] - b.points[order_b], axis=1)
    return float(np.mean(gaps**p) ** (1.0 / p))
