from __future__ import annotations

import logging
import os
import sys
from dataclasses import dataclass

from dotenv import load_dotenv

from .errors import InputFormatError

# Load environment variables from a local .env if present to ease development.
load_dotenv()


VERSION = "0.1.0"

DEFAULT_NODE_BUDGET = 10**9
DEFAULT_SEED = 0
DEFAULT_WORKERS = 1
# minimal_subsemigroups enumerates every nonempty subset up to this order
EXHAUSTIVE_SUBSET_LIMIT = 20

LOG_LEVELS = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
OUTPUT_FORMATS = ("json", "text")

LOGGER_NAME = "ultrafilter_workbench"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def env_workers() -> int:
    return max(1, _env_int("WORKBENCH_WORKERS", DEFAULT_WORKERS))


def env_node_budget() -> int:
    return max(1, _env_int("WORKBENCH_NODE_BUDGET", DEFAULT_NODE_BUDGET))


def env_seed() -> int:
    return _env_int("WORKBENCH_SEED", DEFAULT_SEED)


def log_level() -> int:
    raw = os.environ.get("WORKBENCH_LOG", "").strip().lower()
    return LOG_LEVELS.get(raw, logging.ERROR)


def configure_logging(level: int | None = None) -> logging.Logger:
    logger = logging.getLogger(LOGGER_NAME)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    logger.setLevel(log_level() if level is None else level)
    return logger


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(f"{LOGGER_NAME}.{name}")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    inputs: tuple[str, ...] = ()
    horizon: int | None = None
    budget: int = DEFAULT_NODE_BUDGET
    output: str = "json"
    seed: int = DEFAULT_SEED
    workers: int = DEFAULT_WORKERS
    timing: bool = True

    def validate(self) -> "RunConfig":
        if self.horizon is not None and self.horizon < 1:
            raise InputFormatError(f"horizon must be >= 1, got {self.horizon}")
        if self.budget < 1:
            raise InputFormatError(f"budget must be >= 1, got {self.budget}")
        if self.workers < 1:
            raise InputFormatError(f"workers must be >= 1, got {self.workers}")
        if self.output not in OUTPUT_FORMATS:
            raise InputFormatError(f"unsupported output format {self.output}")
        return self
