import logging
import os
import sys

import yaml

from .wandb import WandBConfig, prepare_wandb, log_summary


def default_max_workers() -> int:
    """Worker count used when a config leaves it unset. Reads LR_MAX_WORKERS."""
    value = os.environ.get("LR_MAX_WORKERS", "0")
    try:
        return max(0, int(value))
    except ValueError:
        raise ValueError(f"LR_MAX_WORKERS must be an integer, got {value!r}")


def default_output_dir() -> str:
    return os.environ.get("LR_OUTPUT_DIR", ".")


def load_yaml(path):
    loader = getattr(yaml, "CLoader", yaml.SafeLoader)
    with open(path, "r") as f:
        return yaml.load(f, Loader=loader)


def get_logger(name: str, **kwargs) -> logging.Logger:
    logger = logging.getLogger(name, **kwargs)
    logger.setLevel(logging.INFO)

    # one handler per logger name, re-imports must not duplicate lines
    if not any(getattr(h, "_longref", False) for h in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(logging.INFO)
        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        handler.setFormatter(formatter)
        handler._longref = True
        logger.addHandler(handler)
        logger.propagate = False

    return logger


def set_log_level(level: int, prefix: str = "longref"):
    """Set the level of every logger (and handler) created under ``prefix``."""
    for name, logger in logging.Logger.manager.loggerDict.items():
        if name.startswith(prefix) and isinstance(logger, logging.Logger):
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)
