"""Arboreal utils."""

import os
from collections.abc import Generator, Iterable, Iterator
from contextlib import contextmanager
from typing import Optional, TypeVar

from tqdm import tqdm

__all__ = ["set_debug_mode", "debug", "set_progress", "progress"]

T = TypeVar("T")

debug_mode: bool = bool(os.environ.get("ARBOREAL_DEBUG", False))
progress_mode: bool = False


def get_debug_mode() -> bool:
    """Returns whether debug reprs are active."""
    return debug_mode


def set_debug_mode(active: bool) -> None:
    """Sets the debug mode of Arboreal.
    When active, reprs of fields and polynomials show their internal encoding.

    Parameters
    ----------
    active : bool
        Whether to enable debug mode.
    """
    global debug_mode
    debug_mode = active


@contextmanager
def debug() -> Generator:
    """Context manager to show internal encodings in reprs."""
    previous = get_debug_mode()
    set_debug_mode(True)
    try:
        yield
    finally:
        set_debug_mode(previous)


def get_progress() -> bool:
    """Returns whether progress bars are shown."""
    return progress_mode


def set_progress(active: bool) -> None:
    """Enables or disables progress bars for long scans.

    Parameters
    ----------
    active : bool
        Whether to show progress bars on stderr.
    """
    global progress_mode
    progress_mode = active


@contextmanager
def progress() -> Generator:
    """Context manager to show progress bars."""
    active = get_progress()
    set_progress(True)
    try:
        yield
    finally:
        set_progress(active)


def track(
    items: Iterable[T], desc: str, total: Optional[int] = None, unit: str = " it"
) -> Iterator[T]:
    """Wraps an iterable in a progress bar if progress bars are enabled."""
    if not progress_mode:
        return iter(items)
    return iter(tqdm(items, desc=desc, total=total, unit=unit, leave=False))
