"""Command-line entry point for SW-ABC experiments and denoising."""

import argparse
import sys
import time
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from loguru import logger
from pydantic import BaseModel, ValidationError

from src.config.constants import EXIT_BUDGET, EXIT_FAILURE, EXIT_OK, EXIT_USAGE
from src.config.logging_config import add_run_sink, setup_logging
from src.denoise.metrics import psnr
from src.denoise.pgm import pgm_read
from src.errors import BudgetExhaustedError, InvalidArgumentError, SwabcError, UsageError
from src.experiments.denoise_run import run_denoise
from src.experiments.distance_curve import CURVE_COLUMNS, distance_curve
from src.experiments.gaussian_bench import BENCH_COLUMNS, gaussian_bench
from src.experiments.storage import finite_or_label, write_csv, write_json
from src.models.run import BENCH_METHODS, CURVE_DISTANCES, RunConfig

CSV_SCHEMAS = f"""output files (under --out):
  distance-curve  curve.csv  columns: {", ".join(CURVE_COLUMNS)}
  gaussian-bench  bench.csv  columns: {", ".join(BENCH_COLUMNS)}
                  particles-<method>.csv  columns: dim, generation, theta_0, weight, distance, epsilon
  denoise         denoised.pgm, noisy.pgm (with --add-noise), metrics.json
  every command   run.json (effective configuration), run.log (DEBUG log of the run)

exit codes: 0 success, 2 usage error, 3 budget exhausted (partial output written), 1 other errors
"""


def _csv_list(value: str) -> list[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _int_list(value: str) -> list[int]:
    try:
        return [int(item) for item in _csv_list(value)]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per experiment."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON run configuration; flags override it")
    common.add_argument("--seed", type=int, help="Run seed")
    common.add_argument("--out", type=Path, help="Output directory")
    common.add_argument("--threads", type=int, help="Worker cap (bounded by SWABC_THREADS)")

    parser = argparse.ArgumentParser(
        prog="swabc",
        description="Sliced-Wasserstein ABC experiments and patch denoising",
        epilog=CSV_SCHEMAS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    curve = sub.add_parser(
        "distance-curve",
        parents=[common],
        help="Distances between Gaussian samples over a variance grid",
        epilog=CSV_SCHEMAS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    curve.add_argument("--dim", type=int, help="Dimension d (default 2)")
    curve.add_argument("--n", type=int, help="Draws per measure (default 1000)")
    curve.add_argument("--grid-min", type=float, help="Smallest sigma² (default 0.1)")
    curve.add_argument("--grid-max", type=float, help="Largest sigma² (default 9)")
    curve.add_argument("--grid-size", type=int, help="Grid points (default 100)")
    curve.add_argument(
        "--distances",
        type=_csv_list,
        help=f"Comma-separated names (default {','.join(CURVE_DISTANCES)}; also analytic-sw2)",
    )
    curve.add_argument("--num-projections", type=int, help="Sliced-Wasserstein projections L")
    curve.add_argument("--order-p", type=float, help="Wasserstein order p (default 2)")

    bench = sub.add_parser(
        "gaussian-bench",
        parents=[common],
        help="SMC-ABC strategies on the Gaussian scale model",
        epilog=CSV_SCHEMAS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    bench.add_argument("--dims", type=_int_list, help="Comma-separated dimensions (default 2,10,20)")
    bench.add_argument("--n", type=int, help="Observed sample size (default 100)")
    bench.add_argument("--particles", type=int, help="SMC particles N (default 1000)")
    bench.add_argument(
        "--methods", type=_csv_list, help=f"Comma-separated methods (default {','.join(BENCH_METHODS)})"
    )
    bench.add_argument(
        "--time-budget",
        type=float,
        help="Seconds per method and dimension; 0 disables (default SWABC TIME_BUDGET_SECONDS)",
    )
    bench.add_argument("--max-generations", type=int, help="Generation cap; 0 disables")
    bench.add_argument("--max-simulations", type=int, help="Simulator call cap")
    bench.add_argument("--alpha", type=float, help="Tolerance quantile (default 0.5)")
    bench.add_argument("--num-projections", type=int, help="Sliced-Wasserstein projections L")
    bench.add_argument("--reference-draws", type=int, help="Analytic posterior draws")

    den = sub.add_parser("denoise", parents=[common], help="Denoise a PGM image")
    den.add_argument("input", type=Path, nargs="?", help="Input PGM (P5, maxval 255)")
    den.add_argument("--sigma", type=float, help="Noise standard deviation (default 20)")
    den.add_argument("--method", choices=["nlmeans", "swabc"], help="Denoiser (default swabc)")
    den.add_argument("--add-noise", action="store_true", default=None, help="Corrupt input first")
    den.add_argument("--clean", type=Path, help="Clean reference PGM for PSNR")
    den.add_argument(
        "--report-psnr", action="store_true", default=None, help="Fail without a clean reference"
    )
    den.add_argument("--radius", type=int, help="Patch radius r (default 3)")
    den.add_argument("--search-window", type=int, help="Search half-width (default 10)")
    den.add_argument("--dict-size", type=int, help="Dictionary size |D| (default 1000)")
    den.add_argument("--T", dest="T", type=int, help="Accepted candidates per anchor")
    den.add_argument("--S", dest="S", type=int, help="Cluster positions per anchor")
    den.add_argument("--m", dest="m", type=int, help="Observed patches per anchor")
    den.add_argument("--epsilon", type=float, help="Acceptance tolerance (default (2r+1)²)")
    den.add_argument("--h", type=float, help="NL-means filtering strength (default sigma)")
    den.add_argument(
        "--patch-average",
        action="store_true",
        default=None,
        help="Average NL-means patch distances over the patch area",
    )
    den.add_argument("--num-projections", type=int, help="Sliced-Wasserstein projections L")
    den.add_argument(
        "--compare-power", action="store_true", default=None, help="Compare SW_p^p to epsilon"
    )
    den.add_argument("--proposal-cap-factor", type=int, help="Proposal cap as a multiple of T")

    cmp_ = sub.add_parser("psnr", parents=[common], help="PSNR between two PGM images")
    cmp_.add_argument("a", type=Path, help="Reference PGM")
    cmp_.add_argument("b", type=Path, help="Compared PGM")
    return parser


def _merged(model: BaseModel, updates: dict[str, Any]) -> dict[str, Any]:
    """Model fields with the non-None updates applied."""
    data = model.model_dump()
    data.update({key: value for key, value in updates.items() if value is not None})
    return data


def load_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, then the JSON file, then command-line flags."""
    top = {"command": args.command, "seed": args.seed, "out": args.out, "threads": args.threads}
    top = {key: value for key, value in top.items() if value is not None}
    base = RunConfig.from_json(args.config, **top) if args.config else RunConfig(**top)

    if args.command == "distance-curve":
        section = _merged(
            base.distance_curve,
            {
                "dim": args.dim,
                "n": args.n,
                "grid_min": args.grid_min,
                "grid_max": args.grid_max,
                "grid_size": args.grid_size,
                "distances": args.distances,
                "num_projections": args.num_projections,
                "order_p": args.order_p,
            },
        )
        return base.model_validate({**base.model_dump(), "distance_curve": section})

    if args.command == "gaussian-bench":
        section = _merged(
            base.gaussian_bench,
            {
                "dims": args.dims,
                "n": args.n,
                "num_particles": args.particles,
                "methods": args.methods,
                "max_total_simulations": args.max_simulations,
                "quantile_alpha": args.alpha,
                "num_projections": args.num_projections,
                "reference_draws": args.reference_draws,
            },
        )
        # 0 turns a limit off
        if args.time_budget is not None:
            section["time_budget_seconds"] = args.time_budget or None
        if args.max_generations is not None:
            section["max_generations"] = args.max_generations or None
        return base.model_validate({**base.model_dump(), "gaussian_bench": section})

    if args.command == "denoise":
        params = _merged(
            base.denoise.params,
            {
                "sigma": args.sigma,
                "r": args.radius,
                "search_window": args.search_window,
                "dict_size": args.dict_size,
                "T": args.T,
                "S": args.S,
                "m": args.m,
                "epsilon": args.epsilon,
                "h": args.h,
                "patch_average": args.patch_average,
                "num_projections": args.num_projections,
                "compare_power": args.compare_power,
                "proposal_cap_factor": args.proposal_cap_factor,
            },
        )
        params["seed"] = base.seed
        section = _merged(
            base.denoise,
            {
                "input": args.input,
                "clean": args.clean,
                "method": args.method,
                "add_noise": args.add_noise,
                "report_psnr": args.report_psnr,
            },
        )
        section["params"] = params
        return base.model_validate({**base.model_dump(), "denoise": section})

    section = _merged(base.psnr, {"a": args.a, "b": args.b})
    return base.model_validate({**base.model_dump(), "psnr": section})


def execute(cfg: RunConfig) -> None:
    """Run one command and write its outputs under cfg.out."""
    out = cfg.out
    start = time.perf_counter()
    sidecar: dict[str, Any] = cfg.sidecar()

    if cfg.command == "distance-curve":
        frame = distance_curve(cfg.distance_curve, cfg.seed, cfg.threads)
        write_csv(frame, out / "curve.csv")

    elif cfg.command == "gaussian-bench":
        outcome = gaussian_bench(cfg.gaussian_bench, cfg.seed, cfg.threads)
        write_csv(outcome.frame, out / "bench.csv")
        for method, particles in outcome.particles.items():
            write_csv(particles, out / f"particles-{method}.csv")
        sidecar["results"] = outcome.sidecar
        sidecar["wall_clock_seconds"] = time.perf_counter() - start
        write_json(sidecar, out / "run.json")
        if outcome.budget_exhausted:
            raise BudgetExhaustedError("a method ran out of budget inside generation 0")
        return

    elif cfg.command == "denoise":
        metrics = run_denoise(cfg.denoise, out, cfg.threads)
        write_json(metrics, out / "metrics.json")

    else:
        if cfg.psnr.a is None or cfg.psnr.b is None:
            raise UsageError("psnr needs two PGM paths")
        a, b = pgm_read(cfg.psnr.a), pgm_read(cfg.psnr.b)
        try:
            value = psnr(a, b)
        except InvalidArgumentError as exc:
            raise UsageError(str(exc)) from exc
        print("inf" if value == float("inf") else f"{value:.2f}")
        sidecar["psnr"] = {**sidecar["psnr"], "value": finite_or_label(value)}

    sidecar["wall_clock_seconds"] = time.perf_counter() - start
    write_json(sidecar, out / "run.json")


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments, run the command and map errors to exit codes.

    Args:
        argv: Arguments without the program name (sys.argv[1:] if None)

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    setup_logging(command=args.command)

    try:
        cfg = load_config(args)
    except (ValidationError, InvalidArgumentError, OSError, ValueError) as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_USAGE

    run_sink = add_run_sink(cfg.out)
    logger.info(f"Running {cfg.command} (seed={cfg.seed}, out={cfg.out})")
    try:
        execute(cfg)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE
    except BudgetExhaustedError as e:
        logger.warning(f"Budget exhausted, partial results written: {e}")
        return EXIT_BUDGET
    except SwabcError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILURE
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        return EXIT_FAILURE
    finally:
        logger.remove(run_sink)
    return EXIT_OK


def run() -> None:
    """CLI entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
