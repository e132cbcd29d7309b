"""Unit tests for Hilbert indices, Hilbert matching and the swapping refinement."""

import itertools

import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment
from scipy.spatial.distance import cdist

from src.distances.hilbert import hilbert_distance, hilbert_index, hilbert_order
from src.distances.swapping import swapping_distance
from src.distances.wasserstein import wasserstein_1d
from src.errors import InvalidArgumentError
from src.models.measure import EmpiricalMeasure


def exact_cost(a: np.ndarray, b: np.ndarray, p: float) -> float:
    """Optimal assignment W_p between equal-size point sets."""
    cost = cdist(a, b) ** p
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].mean() ** (1.0 / p))


class TestHilbertIndex:
    """Tests for hilbert_index and hilbert_order."""

    @pytest.mark.parametrize("d,bits", [(2, 1), (2, 3), (3, 2), (4, 1)])
    def test_curve_visits_adjacent_cells(self, d: int, bits: int) -> None:
        """Indices are a permutation and consecutive cells share a face."""
        cells = list(itertools.product(range(2**bits), repeat=d))
        indices = [hilbert_index(cell, bits) for cell in cells]
        assert sorted(indices) == list(range(2 ** (bits * d)))
        walk = np.array(cells)[np.argsort(indices)]
        steps = np.abs(np.diff(walk, axis=0)).sum(axis=1)
        assert np.all(steps == 1)

    def test_curve_starts_at_origin(self) -> None:
        """The origin has index zero."""
        assert hilbert_index([0, 0, 0], bits=4) == 0

    def test_one_dimension_is_identity(self) -> None:
        """In d = 1 the index is the coordinate."""
        assert hilbert_index([5], bits=3) == 5

    def test_order_agrees_with_index(self, rng: np.random.Generator) -> None:
        """The vectorized sort follows the scalar index."""
        cells = rng.integers(0, 2**10, size=(200, 3))
        indices = np.array([hilbert_index(cell, 10) for cell in cells])
        assert np.array_equal(indices[hilbert_order(cells, 10)], np.sort(indices))

    def test_order_without_index_limit(self, rng: np.random.Generator) -> None:
        """hilbert_order works where k * d exceeds 62."""
        cells = rng.integers(0, 2**16, size=(50, 100))
        order = hilbert_order(cells, 16)
        assert sorted(order.tolist()) == list(range(50))

    def test_index_range_limit(self) -> None:
        """k * d above 62 is rejected by the scalar index."""
        with pytest.raises(InvalidArgumentError):
            hilbert_index([0] * 4, bits=16)

    def test_non_integer_cells_rejected(self) -> None:
        """Cells must be integers."""
        with pytest.raises(InvalidArgumentError):
            hilbert_index([0.5, 1.0], bits=2)

    def test_out_of_range_cells_rejected(self) -> None:
        """Coordinates must lie on the grid."""
        with pytest.raises(InvalidArgumentError):
            hilbert_index([4, 0], bits=2)


class TestMatchingDistances:
    """Tests for hilbert_distance and swapping_distance."""

    def test_identical_measures(self, small_pair: tuple[EmpiricalMeasure, EmpiricalMeasure]) -> None:
        """Both distances vanish on a measure and itself."""
        a, _ = small_pair
        assert hilbert_distance(a, a) == 0.0
        assert swapping_distance(a, a) == 0.0

    def test_one_dimension_is_exact(self, rng: np.random.Generator) -> None:
        """Sorting is optimal in d = 1."""
        x, y = rng.normal(size=30), rng.normal(1.0, 2.0, size=30)
        a, b = EmpiricalMeasure(points=x), EmpiricalMeasure(points=y)
        assert hilbert_distance(a, b, p=2.0) == pytest.approx(wasserstein_1d(x, y, 2.0), rel=1e-12)

    def test_bounds_on_tiny_instances(self, rng: np.random.Generator) -> None:
        """hilbert >= swapping >= optimal assignment."""
        for _ in range(200):
            n = int(rng.integers(1, 8))
            d = int(rng.integers(1, 4))
            p = float(rng.choice([1.0, 2.0]))
            a = EmpiricalMeasure(points=rng.normal(size=(n, d)))
            b = EmpiricalMeasure(points=rng.normal(size=(n, d)))
            hilbert = hilbert_distance(a, b, p)
            swapped = swapping_distance(a, b, p)
            exact = exact_cost(a.points, b.points, p)
            assert hilbert >= swapped - 1e-9
            assert swapped >= exact - 1e-9
            if d == 1:
                assert wasserstein_1d(a.points[:, 0], b.points[:, 0], p) == pytest.approx(
                    exact, abs=1e-9
                )

    def test_swapping_reaches_optimum_for_pairs(self, rng: np.random.Generator) -> None:
        """With two points one swap decides the assignment."""
        for _ in range(50):
            a = EmpiricalMeasure(points=rng.normal(size=(2, 3)))
            b = EmpiricalMeasure(points=rng.normal(size=(2, 3)))
            assert swapping_distance(a, b) == pytest.approx(exact_cost(a.points, b.points, 2.0))

    def test_unequal_sizes_rejected(self, rng: np.random.Generator) -> None:
        """Matchings need equal sample counts."""
        a = EmpiricalMeasure(points=rng.normal(size=(4, 2)))
        b = EmpiricalMeasure(points=rng.normal(size=(5, 2)))
        with pytest.raises(InvalidArgumentError):
            hilbert_distance(a, b)
        with pytest.raises(InvalidArgumentError):
            swapping_distance(a, b)

    def test_invalid_sweeps(self, small_pair: tuple[EmpiricalMeasure, EmpiricalMeasure]) -> None:
        """At least one sweep is required."""
        a, b = small_pair
        with pytest.raises(InvalidArgumentError):
            swapping_distance(a, b, max_sweeps=0)
