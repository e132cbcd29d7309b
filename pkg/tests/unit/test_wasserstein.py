"""Unit tests for 1-D Wasserstein and Sliced-Wasserstein distances."""

import itertools

import numpy as np
import pytest

from src.distances import gaussian_sw2_oracle, gaussian_w2_analytic
from src.distances.wasserstein import sample_projections, sliced_wasserstein, wasserstein_1d
from src.errors import InvalidArgumentError
from src.models.measure import DistanceConfig, EmpiricalMeasure
from tests.unit.test_hilbert import exact_cost


def brute_force_cost(x: np.ndarray, y: np.ndarray, p: float) -> float:
    """Minimum mean |x_i - y_sigma(i)|^p over all permutations."""
    return min(
        float(np.mean(np.abs(x - y[list(perm)]) ** p))
        for perm in itertools.permutations(range(len(y)))
    )


class TestWasserstein1d:
    """Tests for wasserstein_1d."""

    def test_identical_samples(self) -> None:
        """Equal samples are at distance zero."""
        assert wasserstein_1d([3.0, 1.0, 2.0], [1.0, 2.0, 3.0]) == 0.0

    def test_unit_shift(self) -> None:
        """Shifting every point by one costs one."""
        assert wasserstein_1d([0.0, 1.0], [1.0, 2.0], p=1.0) == pytest.approx(1.0)

    def test_order_two_shift(self) -> None:
        """W_2 of a constant shift is the shift."""
        x = np.array([0.5, -1.0, 4.0, 2.0])
        assert wasserstein_1d(x, x + 3.0, p=2.0) == pytest.approx(3.0)

    def test_unequal_sizes(self) -> None:
        """Half the mass of y moves by 2."""
        assert wasserstein_1d([0.0], [0.0, 2.0], p=1.0) == pytest.approx(1.0)

    def test_dirac_against_two_points(self) -> None:
        """Half the mass of y moves by 1."""
        assert wasserstein_1d([0.0], [0.0, 1.0], p=1.0) == pytest.approx(0.5)

    def test_weighted_samples(self) -> None:
        """A quarter of the mass moves by 2."""
        value = wasserstein_1d([0.0, 2.0], [0.0], p=1.0, weights_x=[3.0, 1.0])
        assert value == pytest.approx(0.5)

    def test_weights_follow_sorting(self) -> None:
        """Weights stay attached to their samples when inputs are unsorted."""
        value = wasserstein_1d([2.0, 0.0], [0.0], p=1.0, weights_x=[1.0, 3.0])
        assert value == pytest.approx(0.5)

    def test_matches_permutation_oracle(self, rng: np.random.Generator) -> None:
        """Agrees with exhaustive assignment on tiny instances."""
        for _ in range(100):
            n = int(rng.integers(1, 7))
            p = float(rng.choice([1.0, 1.5, 2.0, 3.0]))
            x, y = rng.normal(size=n), rng.normal(size=n)
            assert wasserstein_1d(x, y, p) ** p == pytest.approx(
                brute_force_cost(x, y, p), abs=1e-9
            )

    def test_empty_input_rejected(self) -> None:
        """Empty samples are invalid."""
        with pytest.raises(InvalidArgumentError):
            wasserstein_1d([], [1.0])

    def test_order_below_one_rejected(self) -> None:
        """p < 1 is not a metric order."""
        with pytest.raises(InvalidArgumentError):
            wasserstein_1d([0.0], [1.0], p=0.5)

    def test_nan_rejected(self) -> None:
        """NaN samples are invalid."""
        with pytest.raises(InvalidArgumentError):
            wasserstein_1d([np.nan], [1.0])


class TestSampleProjections:
    """Tests for sample_projections."""

    def test_unit_directions(self) -> None:
        """Every direction has unit norm."""
        projections = sample_projections(5, 30, seed=1)
        assert projections.directions.shape == (30, 5)
        np.testing.assert_allclose(np.linalg.norm(projections.directions, axis=1), 1.0)

    def test_seeded(self) -> None:
        """The same seed gives the same directions."""
        a = sample_projections(3, 10, seed=4).directions
        b = sample_projections(3, 10, seed=4).directions
        assert np.array_equal(a, b)

    def test_line_directions_are_signs(self) -> None:
        """On S^0 every direction is +1 or -1."""
        directions = sample_projections(1, 10, seed=1).directions
        assert set(np.unique(directions)) <= {-1.0, 1.0}

    def test_directions_centred(self) -> None:
        """With 10^5 directions each coordinate mean is within 0.02 of 0."""
        directions = sample_projections(3, 100_000, seed=2).directions
        assert np.all(np.abs(directions.mean(axis=0)) < 0.02)

    def test_invalid_sizes(self) -> None:
        """d and L must be positive."""
        with pytest.raises(InvalidArgumentError):
            sample_projections(0, 10)


class TestSlicedWasserstein:
    """Tests for sliced_wasserstein."""

    def test_identical_measures(self, small_pair: tuple[EmpiricalMeasure, EmpiricalMeasure]) -> None:
        """A measure is at distance zero from itself."""
        a, _ = small_pair
        assert sliced_wasserstein(a, a) == 0.0

    def test_symmetric(self, small_pair: tuple[EmpiricalMeasure, EmpiricalMeasure]) -> None:
        """SW(a, b) == SW(b, a) with shared projections."""
        a, b = small_pair
        projections = sample_projections(2, 50, seed=3)
        assert sliced_wasserstein(a, b, projections=projections) == pytest.approx(
            sliced_wasserstein(b, a, projections=projections), abs=1e-12
        )

    def test_one_dimension_reduces_to_w_p(self, rng: np.random.Generator) -> None:
        """In d = 1 every projection is +-1, so SW_p = W_p."""
        x, y = rng.normal(size=40), rng.normal(2.0, 0.5, size=40)
        a, b = EmpiricalMeasure(points=x), EmpiricalMeasure(points=y)
        cfg = DistanceConfig(order_p=2.0, num_projections=7, seed=0)
        assert sliced_wasserstein(a, b, cfg) == pytest.approx(wasserstein_1d(x, y, 2.0), rel=1e-12)

    def test_unequal_sizes(self, rng: np.random.Generator) -> None:
        """Measures of different sizes are supported."""
        a = EmpiricalMeasure(points=rng.normal(size=(30, 3)))
        b = EmpiricalMeasure(points=rng.normal(size=(45, 3)))
        assert sliced_wasserstein(a, b) > 0.0

    def test_dimension_mismatch(self, rng: np.random.Generator) -> None:
        """Measures must share a dimension."""
        a = EmpiricalMeasure(points=rng.normal(size=(5, 2)))
        b = EmpiricalMeasure(points=rng.normal(size=(5, 3)))
        with pytest.raises(InvalidArgumentError):
            sliced_wasserstein(a, b)

    def test_metric_properties(self, rng: np.random.Generator) -> None:
        """Symmetry, triangle inequality and indiscernibility with shared projections."""
        projections = sample_projections(2, 20, seed=9)
        for _ in range(500):
            n = int(rng.integers(1, 6))
            a, b, c = (EmpiricalMeasure(points=rng.normal(size=(n, 2))) for _ in range(3))
            ab = sliced_wasserstein(a, b, projections=projections)
            bc = sliced_wasserstein(b, c, projections=projections)
            ac = sliced_wasserstein(a, c, projections=projections)
            assert ab == pytest.approx(sliced_wasserstein(b, a, projections=projections), abs=1e-12)
            assert ac <= ab + bc + 1e-9
            assert sliced_wasserstein(a, a, projections=projections) == 0.0

    def test_bounded_by_exact_transport(self, rng: np.random.Generator) -> None:
        """Projection is 1-Lipschitz, so SW_p never exceeds the exact W_p."""
        for _ in range(100):
            n, d = int(rng.integers(1, 7)), int(rng.integers(1, 4))
            p = float(rng.choice([1.0, 2.0]))
            x, y = rng.normal(size=(n, d)), rng.normal(size=(n, d))
            cfg = DistanceConfig(order_p=p, num_projections=25, seed=int(rng.integers(1000)))
            value = sliced_wasserstein(EmpiricalMeasure(points=x), EmpiricalMeasure(points=y), cfg)
            assert value <= exact_cost(x, y, p) + 1e-9

    def test_error_shrinks_with_projection_count(self, rng: np.random.Generator) -> None:
        """Spread over 50 projection seeds falls by more than half from L = 100 to 1000."""
        a = EmpiricalMeasure(points=rng.normal(size=(200, 10)))
        b = EmpiricalMeasure(points=rng.normal(scale=1.5, size=(200, 10)))
        spreads = []
        for num_projections in (100, 1000):
            values = [
                sliced_wasserstein(a, b, DistanceConfig(num_projections=num_projections, seed=s))
                for s in range(50)
            ]
            spreads.append(float(np.std(values, ddof=1)))
        assert spreads[1] < 0.5 * spreads[0]

    @pytest.mark.slow
    @pytest.mark.parametrize("d", [2, 10, 100])
    def test_matches_gaussian_oracle(self, d: int) -> None:
        """Empirical SW_2 between N(0, 4I) and N(0, 2.25I) is close to 0.5."""
        values = []
        for seed in range(10):
            gen = np.random.default_rng(seed)
            a = EmpiricalMeasure(points=2.0 * gen.standard_normal((1000, d)))
            b = EmpiricalMeasure(points=1.5 * gen.standard_normal((1000, d)))
            values.append(sliced_wasserstein(a, b, DistanceConfig(seed=seed)))
        oracle = gaussian_sw2_oracle(2.0, 1.5, d)
        assert oracle == 0.5
        assert abs(np.median(values) - oracle) <= 0.15 * oracle


class TestAnalytic:
    """Tests for the closed-form Gaussian distances."""

    def test_w2_scales_with_dimension(self) -> None:
        """sqrt(d) |sigma* - sigma|."""
        assert gaussian_w2_analytic(2.0, 1.0, 4) == pytest.approx(2.0)

    def test_sw2_free_of_dimension(self) -> None:
        """Every projection has the same 1-D distance."""
        assert gaussian_sw2_oracle(2.0, 1.0, 100) == pytest.approx(1.0)

    def test_non_positive_scale_rejected(self) -> None:
        """Standard deviations must be positive."""
        with pytest.raises(InvalidArgumentError):
            gaussian_w2_analytic(0.0, 1.0, 2)
