"""Per-proposal random streams and the batch runner."""

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from types import TracebackType
from typing import TypeVar

import numpy as np

from src.config.settings import settings

T = TypeVar("T")


def proposal_streams(
    seed: int, generation: int, index: int
) -> tuple[np.random.Generator, np.random.SeedSequence]:
    """
    Independent streams for one proposal.

    Streams depend only on (seed, generation, index), never on which thread
    evaluates the proposal.

    Returns:
        Tuple of (generator for prior draws and perturbations, seed for the simulator)
    """
    parameter_seq, simulator_seq = np.random.SeedSequence([seed, generation, index]).spawn(2)
    return np.random.default_rng(parameter_seq), simulator_seq


def resolve_workers(workers: int | None) -> int:
    """Worker count, capped by SWABC_THREADS."""
    cap = settings.SWABC_THREADS
    return max(1, min(workers, cap) if workers is not None else cap)


class BatchRunner:
    """Ordered map over a thread pool; runs inline with one worker."""

    def __init__(self, workers: int | None = None) -> None:
        self.workers = resolve_workers(workers)
        self._pool: ThreadPoolExecutor | None = None

    def __enter__(self) -> "BatchRunner":
        if self.workers > 1:
            self._pool = ThreadPoolExecutor(max_workers=self.workers)
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        if self._pool is not None:
            self._pool.shutdown(wait=True)
            self._pool = None

    def map(self, fn: Callable[[int], T], items: Iterable[int]) -> list[T]:
        """Apply fn to every item, results in input order."""
        if self._pool is None:
            return [fn(item) for item in items]
        return list(self._pool.map(fn, items))
