"""Unit tests for the experiment drivers and output helpers."""

import json
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from src.errors import UsageError
from src.experiments.denoise_run import denoise_image, noise_seed
from src.experiments.distance_curve import check_distance_names
from src.experiments.gaussian_bench import check_methods
from src.experiments.psnr_table import load_corpus, psnr_table, summarize
from src.experiments.storage import finite_or_label, write_csv, write_json
from src.models.image import DenoiseParams, GrayImage
from src.models.inference import StopReason


class TestStorage:
    """Tests for the CSV and JSON writers."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [(1.5, 1.5), (float("inf"), "inf"), (float("-inf"), "-inf"), (float("nan"), "nan")],
    )
    def test_finite_or_label(self, value: float, expected: float | str) -> None:
        """Non-finite floats become labels."""
        assert finite_or_label(value) == expected

    def test_json_handles_numpy_and_enums(self, tmp_path: Path) -> None:
        """numpy values, paths and enums serialise."""
        path = write_json(
            {"b": np.float32(np.inf), "a": np.arange(3), "r": StopReason.STAGNATION, "p": tmp_path},
            tmp_path / "x" / "out.json",
        )
        payload = json.loads(path.read_text())
        assert payload == {"a": [0, 1, 2], "b": "inf", "p": str(tmp_path), "r": "stagnation"}
        assert list(payload) == ["a", "b", "p", "r"]

    def test_csv_keeps_full_precision(self, tmp_path: Path) -> None:
        """Floats survive a CSV round trip exactly."""
        frame = pd.DataFrame({"value": [1.0 / 3.0, np.pi]})
        path = write_csv(frame, tmp_path / "values.csv")
        assert pd.read_csv(path)["value"].tolist() == frame["value"].tolist()


class TestNameChecks:
    """Tests for the command name validation."""

    def test_distance_names(self) -> None:
        """Curve names outside the supported set are usage errors."""
        check_distance_names(["sliced-wasserstein", "analytic-sw2"])
        with pytest.raises(UsageError):
            check_distance_names(["sliced-wasserstein", "energy"])

    def test_bench_methods(self) -> None:
        """Benchmark method names are validated."""
        check_methods(["sw", "kl"])
        with pytest.raises(UsageError):
            check_methods(["mmd"])

    def test_denoise_method(self, random_image: GrayImage) -> None:
        """Unknown denoisers are usage errors."""
        with pytest.raises(UsageError):
            denoise_image(random_image, "bm3d", DenoiseParams())


class TestPsnrTable:
    """Tests for psnr_table and summarize."""

    def test_noise_stream_is_separate(self) -> None:
        """The noise stream differs from the plain seed stream."""
        plain = np.random.default_rng(3).random()
        noisy = np.random.default_rng(noise_seed(3)).random()
        assert plain != noisy

    def test_table_and_summary(self, checkerboard_image: GrayImage) -> None:
        """One row per image, sigma and method; summary adds the reference column."""
        images = {"board": checkerboard_image, "flat": GrayImage(pixels=np.full((32, 32), 90.0))}
        params = DenoiseParams(r=1, search_window=2, patch_average=True)
        table = psnr_table(images, [10.0, 50.0], ["nlmeans"], base_params=params, seed=1)
        assert len(table) == 4
        assert (table["psnr_denoised"] > table["psnr_noisy"]).all()
        summary = summarize(table)
        assert summary["sigma"].tolist() == [10.0, 50.0]
        assert summary["reference"].tolist() == [30.43, 21.99]

    def test_load_corpus(self, tmp_path: Path, pgm_file: Path) -> None:
        """PGM files are keyed by stem; empty directories are an error."""
        corpus = load_corpus(pgm_file.parent)
        assert list(corpus) == ["board"]
        empty = tmp_path / "empty"
        empty.mkdir()
        with pytest.raises(FileNotFoundError):
            load_corpus(empty)
