"""Logging helpers."""
import logging
import time
from contextlib import contextmanager
from typing import Iterator


@contextmanager
def log_duration(logger: logging.Logger, label: str) -> Iterator[None]:
    """Log the wall time spent inside the block at DEBUG level."""
    started = time.perf_counter()
    try:
        yield
    finally:
        logger.debug(f"{label} took {time.perf_counter() - started:.3f}s")
