"""Logging configuration using Loguru."""

import sys
from pathlib import Path

from loguru import logger

from src.config.settings import settings

RUN_LOG_NAME = "run.log"

_FILE_FORMAT = (
    "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {extra[command]} | "
    "{name}:{function}:{line} - {message}"
)


def setup_logging(level: str | None = None, command: str | None = None) -> None:
    """
    Configure console and rotating file sinks.

    Every record carries the running subcommand in ``extra["command"]``.

    Args:
        level: Console level override (defaults to settings.LOG_LEVEL)
        command: Subcommand name shown on each line
    """
    logger.remove()
    logger.configure(extra={"command": command or "swabc"})

    logger.add(
        sys.stderr,
        format=(
            "<green>{time:HH:mm:ss}</green> | "
            "<level>{level: <8}</level> | "
            "<magenta>{extra[command]}</magenta> | "
            "<level>{message}</level>"
        ),
        level=level or settings.LOG_LEVEL,
        colorize=True,
    )

    log_dir = Path(settings.LOG_FILE).parent
    log_dir.mkdir(parents=True, exist_ok=True)

    # Every run appended, DEBUG and up
    logger.add(
        settings.LOG_FILE,
        rotation="10 MB",
        retention="7 days",
        level="DEBUG",
        format=_FILE_FORMAT,
        compression="zip",
    )

    logger.add(
        str(log_dir / "errors.log"),
        rotation="10 MB",
        retention="30 days",
        level="ERROR",
        format=_FILE_FORMAT + "\n{exception}",
        backtrace=True,
        diagnose=True,
    )


def add_run_sink(out_dir: Path) -> int:
    """
    Log the current run to ``out_dir/run.log`` next to its results.

    Args:
        out_dir: Output directory of the run, created if missing

    Returns:
        Handler id for ``logger.remove`` once the run is over
    """
    out_dir.mkdir(parents=True, exist_ok=True)
    return logger.add(
        str(out_dir / RUN_LOG_NAME), level="DEBUG", format=_FILE_FORMAT, mode="w", enqueue=False
    )
