"""Budget caps for exhaustive computations."""

import os
from collections.abc import Generator
from contextlib import contextmanager
from typing import Optional

__all__ = [
    "CapExceededError",
    "get_cap",
    "set_cap",
    "use_caps",
    "check_cap",
    "CAP_DEFAULTS",
]


class CapExceededError(Exception):
    """A computation would exceed a configured budget cap."""

    def __init__(self, message: str = "budget cap exceeded.") -> None:
        super().__init__(message)


CAP_DEFAULTS: dict[str, int] = {
    "dist_leaves": 64,
    "enum_order": 10**6,
    "closure_order": 10**6,
    "scan_size": 10**6,
    "indecomposable_budget": 10**5,
    "char2_depth": 20,
    "char2_quad_field": 4,
    "char2_quad_depth": 4,
    "q_bits": int(os.environ.get("ARBOREAL_CAP_BITS", 10**6)),
    "extension_order": 2**16,
}

_overrides: dict[str, int] = {}


def get_cap(name: str) -> int:
    """Returns the active value of a cap."""
    if name not in CAP_DEFAULTS:
        raise ValueError(f"Unknown cap: {name}.")
    return _overrides.get(name, CAP_DEFAULTS[name])


def set_cap(name: str, value: Optional[int]) -> None:
    """Sets a cap for all subsequent computations.

    Parameters
    ----------
    name : str
        Name of the cap, one of :data:`CAP_DEFAULTS`.
    value : int, optional
        New value. If ``None``, the default is restored.
    """
    if name not in CAP_DEFAULTS:
        raise ValueError(f"Unknown cap: {name}.")
    if value is None:
        _overrides.pop(name, None)
    else:
        _overrides[name] = value


@contextmanager
def use_caps(**caps: int) -> Generator:
    """Context manager to temporarily override caps."""
    previous = {name: _overrides.get(name) for name in caps}
    for name, value in caps.items():
        set_cap(name, value)
    try:
        yield
    finally:
        for name, value in previous.items():
            set_cap(name, value)


def check_cap(name: str, value: int, what: str) -> None:
    """Raises a :class:`CapExceededError` if ``value`` exceeds the cap ``name``."""
    cap = get_cap(name)
    if value > cap:
        raise CapExceededError(f"{what} = {value} exceeds cap {name}={cap}.")
