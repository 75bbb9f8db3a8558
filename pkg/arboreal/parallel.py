"""Deterministic chunked execution over worker processes."""

import concurrent.futures
import logging
from collections import Counter
from collections.abc import Callable, Hashable, Iterable
from typing import Any, TypeVar

from .random import chunk_ranges
from .utils import track

__all__ = ["map_chunks", "merge_counters", "CHUNK_SIZE"]

T = TypeVar("T")

CHUNK_SIZE = 4096

logger = logging.getLogger(__name__)


def map_chunks(
    fn: Callable[..., T],
    total: int,
    args: tuple[Any, ...] = (),
    workers: int = 1,
    chunk_size: int = CHUNK_SIZE,
    desc: str = "scan",
) -> list[T]:
    """Applies ``fn(*args, stream, start, stop)`` to fixed-size chunks of ``range(total)``.

    Chunk boundaries and stream indices only depend on ``total`` and ``chunk_size``,
    so merged results do not depend on the number of workers. Results are returned
    in chunk order.

    Parameters
    ----------
    fn : Callable[..., T]
        Module-level worker function (it must be picklable for ``workers > 1``).
    total : int
        Size of the index space.
    args : tuple[Any, ...], optional
        Leading positional arguments passed to every call. Defaults to ``()``.
    workers : int, optional
        Number of worker processes. Defaults to ``1`` (run in-process).
    chunk_size : int, optional
        Indices per chunk. Defaults to ``4096``.
    desc : str, optional
        Progress bar label. Defaults to ``"scan"``.

    Returns
    -------
    list[T]
        Per-chunk results.
    """
    chunks = chunk_ranges(total, chunk_size)
    logger.info("%s: %d indices in %d chunks on %d workers", desc, total, len(chunks), workers)
    if workers <= 1 or len(chunks) <= 1:
        return [
            fn(*args, stream, start, stop)
            for stream, start, stop in track(chunks, desc, len(chunks), " chunks")
        ]
    results: list[Any] = [None] * len(chunks)
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        futures = {
            executor.submit(fn, *args, stream, start, stop): stream
            for stream, start, stop in chunks
        }
        done = concurrent.futures.as_completed(futures)
        for future in track(done, desc, len(chunks), " chunks"):
            results[futures[future]] = future.result()
    return results


def merge_counters(counters: Iterable[Counter[Hashable]]) -> Counter[Hashable]:
    """Adds tallies."""
    total: Counter[Hashable] = Counter()
    for c in counters:
        total.update(c)
    return total
