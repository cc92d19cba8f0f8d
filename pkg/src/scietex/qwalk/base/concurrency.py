"""
Worker pool sizing.

Functions:
    worker_count() -> int: Number of worker threads for parallel scans.
"""

import os

from .errors import SchemaError

THREADS_ENV: str = "QWS_THREADS"
DEFAULT_MAX_THREADS: int = 8


def worker_count() -> int:
    """
    Number of worker threads for parallel scans.

    The environment variable ``QWS_THREADS`` (positive integer) sets the count; otherwise it is
    ``min(8, os.cpu_count())``.

    Returns:
        int: Positive number of threads.

    Raises:
        SchemaError: If ``QWS_THREADS`` is set but is not a positive integer.
    """
    value = os.environ.get(THREADS_ENV)
    if value is None or value.strip() == "":
        return max(1, min(DEFAULT_MAX_THREADS, os.cpu_count() or 1))
    try:
        count = int(value)
    except ValueError as exc:
        raise SchemaError(f"must be a positive integer, got {value!r}", path=THREADS_ENV) from exc
    if count < 1:
        raise SchemaError(f"must be a positive integer, got {value!r}", path=THREADS_ENV)
    return count
