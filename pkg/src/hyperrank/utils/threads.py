"""Resolution of the worker thread count."""

import os
from typing import Optional

THREADS_ENV_VAR = "HYPERRANK_THREADS"


def resolve_threads(threads: Optional[int] = None) -> int:
    """Return the number of worker threads to use.

    An explicit value wins, then the `HYPERRANK_THREADS` environment variable, and
    finally a single thread.

    Parameters
    ----------
    threads : int, optional
        Explicitly requested thread count, by default None.

    Returns
    -------
    int
        Thread count, at least 1.

    Raises
    ------
    ValueError
        If the requested or environment value is not a positive integer.
    """
    if threads is None:
        env_value = os.environ.get(THREADS_ENV_VAR)
        if env_value is None or env_value.strip() == "":
            return 1
        try:
            threads = int(env_value)
        except ValueError as e:
            raise ValueError(
                f"{THREADS_ENV_VAR} must be a positive integer (got {env_value!r})."
            ) from e

    if threads < 1:
        raise ValueError(f"Thread count must be at least 1 (got {threads}).")

    return threads
