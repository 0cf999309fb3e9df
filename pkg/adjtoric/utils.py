import os
import time
import logging
from contextlib import contextmanager

import numpy as np

logger = logging.getLogger(__name__)


def ensure_dir(path):
    """Create directory if it does not exist."""
    if path and not os.path.exists(path):
        os.makedirs(path)


def seeded_rng(*keys: int) -> np.random.Generator:
    """Deterministic generator for a tuple of integer keys.

    Every random draw in the package goes through here, so that the same
    (seed, case, attempt) keys always replay the same stream.
    """
    return np.random.default_rng([int(k) for k in keys])


@contextmanager
def stage(name: str, timings: dict = None):
    """Time a pipeline stage and label any error escaping it.

    The exception type is preserved (a genericity error stays retryable);
    the stage name is attached as ``err.stage`` unless an inner stage
    already set it.
    """
    start = time.perf_counter()
    try:
        yield
    except Exception as err:
        if getattr(err, "stage", None) is None:
            err.stage = name
        logger.debug(f"stage {name} failed: {err}")
        raise
    finally:
        if timings is not None:
            timings[name] = timings.get(name, 0.0) + time.perf_counter() - start
