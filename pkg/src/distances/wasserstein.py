"""Exact one-dimensional Wasserstein distance and its sliced extension."""

import numpy as np
from numpy.typing import ArrayLike

from src.errors import InvalidArgumentError
from src.models.measure import DistanceConfig, EmpiricalMeasure, ProjectionSet


def _check_order(p: float) -> None:
    if not p >= 1.0:
        raise InvalidArgumentError(f"Wasserstein order must be >= 1, got {p}")


def _as_samples(values: ArrayLike, name: str) -> np.ndarray:
    samples = np.asarray(values, dtype=np.float64).reshape(-1)
    if samples.size == 0:
        raise InvalidArgumentError(f"{name} must not be empty")
    if not np.all(np.isfinite(samples)):
        raise InvalidArgumentError(f"{name} contains NaN or infinite values")
    return samples


def _cumulative_weights(weights: ArrayLike | None, size: int, name: str) -> np.ndarray:
    """Quantile breakpoints 0 = c_0 < ... < c_size = 1 of a discrete measure."""
    if weights is None:
        return np.arange(size + 1, dtype=np.float64) / size
    w = np.asarray(weights, dtype=np.float64).reshape(-1)
    if w.shape[0] != size:
        raise InvalidArgumentError(f"{name} has {w.shape[0]} entries, expected {size}")
    if not np.all(np.isfinite(w)) or np.any(w < 0) or w.sum() <= 0:
        raise InvalidArgumentError(f"{name} must be finite, non-negative and not all zero")
    cumulative = np.concatenate(([0.0], np.cumsum(w) / w.sum()))
    cumulative[-1] = 1.0
    return cumulative


def quantile_coupling(
    cum_x: np.ndarray, cum_y: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Monotone coupling of two sorted discrete measures.

    Merges both sets of quantile breakpoints; on each resulting interval the
    two quantile functions are constant.

    Args:
        cum_x: Cumulative weights of x, length n + 1
        cum_y: Cumulative weights of y, length m + 1

    Returns:
        Tuple of (x indices, y indices, interval widths)
    """
    edges = np.union1d(cum_x, cum_y)
    widths = np.diff(edges)
    keep = widths > 0
    mids = 0.5 * (edges[:-1] + edges[1:])[keep]
    n = cum_x.shape[0] - 1
    m = cum_y.shape[0] - 1
    ix = np.clip(np.searchsorted(cum_x, mids, side="right") - 1, 0, n - 1)
    iy = np.clip(np.searchsorted(cum_y, mids, side="right") - 1, 0, m - 1)
    return ix, iy, widths[keep]


def _power_costs(
    x_sorted: np.ndarray,
    y_sorted: np.ndarray,
    p: float,
    cum_x: np.ndarray | None = None,
    cum_y: np.ndarray | None = None,
) -> np.ndarray:
    """W_p^p between sorted samples, column-wise when the inputs are 2-D."""
    uniform = cum_x is None and cum_y is None
    if uniform and x_sorted.shape[0] == y_sorted.shape[0]:
        return np.mean(np.abs(x_sorted - y_sorted) ** p, axis=0)
    if cum_x is None:
        cum_x = _cumulative_weights(None, x_sorted.shape[0], "x")
    if cum_y is None:
        cum_y = _cumulative_weights(None, y_sorted.shape[0], "y")
    ix, iy, widths = quantile_coupling(cum_x, cum_y)
    gaps = np.abs(x_sorted[ix] - y_sorted[iy]) ** p
    if gaps.ndim == 1:
        return np.sum(widths * gaps)
    return np.sum(widths[:, None] * gaps, axis=0)


def wasserstein_1d(
    x: ArrayLike,
    y: ArrayLike,
    p: float = 1.0,
    weights_x: ArrayLike | None = None,
    weights_y: ArrayLike | None = None,
    assume_sorted: bool = False,
) -> float:
    """
    Exact W_p between two one-dimensional discrete measures.

    Integrates |F_x^-1(t) - F_y^-1(t)|^p over t in (0, 1) by merging the
    quantile breakpoints of both measures. With equal sizes and uniform
    weights this is the mean over matched sorted samples.

    Args:
        x: Samples of the first measure
        y: Samples of the second measure
        p: Wasserstein order (>= 1)
        weights_x: Optional non-negative weights of x (uniform if None)
        weights_y: Optional non-negative weights of y (uniform if None)
        assume_sorted: Skip sorting when both inputs are already ascending

    Returns:
        W_p (the order-p root, not its p-th power)
    """
    _check_order(p)
    xs = _as_samples(x, "x")
    ys = _as_samples(y, "y")
    wx = None if weights_x is None else np.asarray(weights_x, dtype=np.float64).reshape(-1)
    wy = None if weights_y is None else np.asarray(weights_y, dtype=np.float64).reshape(-1)

    if not assume_sorted:
        order_x = np.argsort(xs, kind="stable")
        order_y = np.argsort(ys, kind="stable")
        xs, ys = xs[order_x], ys[order_y]
        if wx is not None and wx.size == xs.size:
            wx = wx[order_x]
        if wy is not None and wy.size == ys.size:
            wy = wy[order_y]

    cum_x = None if wx is None else _cumulative_weights(wx, xs.size, "weights_x")
    cum_y = None if wy is None else _cumulative_weights(wy, ys.size, "weights_y")
    cost = float(_power_costs(xs, ys, p, cum_x, cum_y))
    return cost ** (1.0 / p)


def sample_projections(d: int, num_projections: int, seed: int | None = None) -> ProjectionSet:
    """
    Draw directions uniformly on the unit sphere S^{d-1}.

    Args:
        d: Ambient dimension
        num_projections: Number of directions L
        seed: RNG seed

    Returns:
        ProjectionSet of L unit vectors
    """
    if d < 1 or num_projections < 1:
        raise InvalidArgumentError(
            f"need d >= 1 and L >= 1, got d={d}, L={num_projections}"
        )
    rng = np.random.default_rng(seed)
    gaussians = rng.standard_normal((num_projections, d))
    norms = np.linalg.norm(gaussians, axis=1)
    # A zero draw has probability zero; redraw it rather than divide by zero
    while np.any(norms == 0.0):
        zero = norms == 0.0
        gaussians[zero] = rng.standard_normal((int(zero.sum()), d))
        norms = np.linalg.norm(gaussians, axis=1)
    return ProjectionSet(directions=gaussians / norms[:, None], seed=seed)


def projected_power_costs(
    a: EmpiricalMeasure, b: EmpiricalMeasure, projections: ProjectionSet, p: float
) -> np.ndarray:
    """Per-direction W_p^p between the projected measures."""
    pa = np.sort(a.points @ projections.directions.T, axis=0)
    pb = np.sort(b.points @ projections.directions.T, axis=0)
    return np.atleast_1d(_power_costs(pa, pb, p))


def sliced_wasserstein(
    a: EmpiricalMeasure,
    b: EmpiricalMeasure,
    cfg: DistanceConfig | None = None,
    projections: ProjectionSet | None = None,
) -> float:
    """
    Monte Carlo Sliced-Wasserstein distance of order p.

    Args:
        a: First empirical measure
        b: Second empirical measure
        cfg: Order, number of projections and seed (defaults when None)
        projections: Fixed directions to reuse; drawn from cfg.seed when None

    Returns:
        SW_p estimate ((1/L) sum_l W_p^p(<u_l, a>, <u_l, b>))^(1/p)
    """
    cfg = cfg or DistanceConfig()
    if a.d != b.d:
        raise InvalidArgumentError(f"dimension mismatch: {a.d} vs {b.d}")
    if projections is None:
        projections = sample_projections(a.d, cfg.num_projections, cfg.seed)
    elif projections.d != a.d:
        raise InvalidArgumentError(
            f"projections live in dimension {projections.d}, measures in {a.d}"
        )
    costs = projected_power_costs(a, b, projections, cfg.order_p)
    return float(np.mean(costs) ** (1.0 / cfg.order_p))
