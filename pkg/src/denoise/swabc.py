"""NL-means with patch weights replaced by an SW-ABC posterior over positions."""

import math
import time

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from src.denoise.patches import build_dictionary, patches_at, phi_labels, reconstruct
from src.distances.wasserstein import sample_projections, sliced_wasserstein
from src.errors import BudgetExhaustedError
from src.inference.base import BasePrior, BaseSimulator, Discrepancy, SeedLike
from src.inference.rejection import rejection_abc
from src.inference.streams import BatchRunner
from src.models.image import DenoiseParams, DenoiseReport, GrayImage, PatchDictionary
from src.models.inference import AbcConfig
from src.models.measure import DistanceConfig, EmpiricalMeasure, ProjectionSet


class WindowPrior(BasePrior):
    """Uniform prior on the search window {-W..W}² around an anchor."""

    dim = 2

    def __init__(self, anchor: np.ndarray, half_width: int) -> None:
        self.anchor = np.asarray(anchor, dtype=np.float64)
        self.half_width = half_width
        self._log_mass = -2.0 * math.log(2 * half_width + 1)

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return self.anchor + rng.integers(-self.half_width, self.half_width + 1, size=2)

    def log_density(self, theta: np.ndarray) -> float:
        offset = np.abs(np.asarray(theta) - self.anchor)
        return self._log_mass if np.all(offset <= self.half_width) else float("-inf")


class NoisyPatchSimulator(BaseSimulator):
    """m copies of P_i plus i.i.d. N(0, sigma²) per entry."""

    def __init__(self, pixels: np.ndarray, r: int, sigma: float) -> None:
        self.pixels = pixels
        self.r = r
        self.sigma = sigma

    def generate(self, theta: np.ndarray, m: int, seed: SeedLike) -> EmpiricalMeasure:
        rng = np.random.default_rng(seed)
        position = np.rint(theta).astype(np.int64)[None, :]
        patch = patches_at(self.pixels, position, self.r)
        return EmpiricalMeasure(points=patch + self.sigma * rng.standard_normal((m, patch.shape[1])))


class AnchorEstimate(BaseModel):
    """Restored patch of one dictionary anchor."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    patch: np.ndarray
    fallback: bool = False
    evaluations: int = 0
    skipped: bool = False


def anchor_seed(seed: int, anchor_index: int) -> int:
    """Run seed for the sampler of one dictionary anchor."""
    return int(np.random.SeedSequence([seed, anchor_index]).generate_state(1)[0])


class SwabcDenoiser:
    """
    SW-ABC NL-means denoiser.

    For each dictionary anchor j the observed data are up to m noisy patches
    from its cluster; rejection ABC over positions in the search window keeps
    candidates i whose simulated patches lie within epsilon in SW_p. The
    restored patch averages P_{i + (l - j)} over accepted i and S cluster
    positions l.
    """

    def __init__(self, params: DenoiseParams | None = None, workers: int | None = None) -> None:
        self.params = params or DenoiseParams()
        self.workers = workers

    def _discrepancy(self, projections: ProjectionSet) -> Discrepancy:
        p = self.params
        cfg = DistanceConfig(order_p=p.order_p, num_projections=p.num_projections, seed=p.seed)
        power = p.order_p if p.compare_power else 1.0

        def disc(observed: EmpiricalMeasure, synthetic: EmpiricalMeasure) -> float:
            return sliced_wasserstein(observed, synthetic, cfg, projections) ** power

        return disc

    def _estimate_anchor(
        self,
        index: int,
        v: GrayImage,
        dictionary: PatchDictionary,
        cluster: np.ndarray,
        disc: Discrepancy,
    ) -> AnchorEstimate:
        p = self.params
        anchor = dictionary.positions[index]
        if len(cluster) == 0:
            return AnchorEstimate(patch=dictionary.patches[index], skipped=True)

        seed = anchor_seed(p.seed, index)
        rng = np.random.default_rng(np.random.SeedSequence([p.seed, index, 1]))
        members = np.column_stack(np.unravel_index(cluster, v.shape))
        if len(members) > p.m:
            chosen = members[rng.choice(len(members), p.m, replace=False)]
        else:
            chosen = members
        observed = EmpiricalMeasure(points=patches_at(v.pixels, chosen, p.r))

        cfg = AbcConfig(
            num_particles=p.T,
            epsilon=p.tolerance,
            synthetic_size=p.m,
            max_generations=None,
            max_total_simulations=p.proposal_cap,
            batch_size=p.T,
            workers=1,
            seed=seed,
        )
        prior = WindowPrior(anchor, p.search_window)
        simulator = NoisyPatchSimulator(v.pixels, p.r, p.sigma)
        fallback = False
        try:
            result = rejection_abc(prior, simulator, observed, disc, cfg)
        except BudgetExhaustedError as exc:
            result = exc.partial
        candidates = np.rint(result.samples).astype(np.int64)
        if len(candidates) == 0:
            candidates = anchor[None, :].astype(np.int64)
            fallback = True

        locations = members[rng.integers(0, len(members), size=p.S)]
        shifts = locations - anchor
        positions = (candidates[:, None, :] + shifts[None, :, :]).reshape(-1, 2)
        patch = patches_at(v.pixels, positions, p.r).mean(axis=0)
        return AnchorEstimate(patch=patch, fallback=fallback, evaluations=result.num_proposals)

    def denoise(self, v: GrayImage) -> DenoiseReport:
        """
        Denoise an image.

        Args:
            v: Noisy image

        Returns:
            DenoiseReport with the clamped output and diagnostics
        """
        p = self.params
        start = time.perf_counter()
        dictionary = build_dictionary(v, p.dict_size, p.r, p.seed)
        labels = phi_labels(v, dictionary)
        projections = sample_projections((2 * p.r + 1) ** 2, p.num_projections, p.seed)
        disc = self._discrepancy(projections)

        flat = labels.ravel()
        order = np.argsort(flat, kind="stable")
        bounds = np.concatenate(([0], np.cumsum(np.bincount(flat, minlength=dictionary.size))))
        clusters = [order[bounds[j] : bounds[j + 1]] for j in range(dictionary.size)]

        with BatchRunner(self.workers) as runner:
            results = runner.map(
                lambda j: self._estimate_anchor(j, v, dictionary, clusters[j], disc),
                range(dictionary.size),
            )

        estimates = np.stack([r.patch for r in results])
        image = GrayImage.clamped(reconstruct(estimates, labels, p.r))
        report = DenoiseReport(
            image=image,
            fallback_count=sum(r.fallback for r in results),
            sw_evaluations=sum(r.evaluations for r in results),
            skipped_anchors=sum(r.skipped for r in results),
        )
        if report.fallback_count:
            logger.warning(
                f"SW-ABC denoiser fell back to the anchor for {report.fallback_count} anchors"
            )
        logger.info(
            f"SW-ABC denoised {v.height}x{v.width} in {time.perf_counter() - start:.2f}s: "
            f"|D|={dictionary.size}, skipped={report.skipped_anchors}, "
            f"SW evaluations={report.sw_evaluations}"
        )
        return report


def swabc_denoise(v: GrayImage, params: DenoiseParams | None = None) -> GrayImage:
    """Denoise v with SW-ABC NL-means and return the clamped image."""
    return SwabcDenoiser(params).denoise(v).image
