"""Counter-based random generators keyed by a seed and a stream index."""

from collections.abc import Generator
from contextlib import contextmanager
from typing import Any, Optional

import numpy

__all__ = [
    "generator",
    "random_permutation",
    "random_integers",
    "seed",
    "set_seed",
    "select_seed",
    "chunk_ranges",
    "random_poly",
]

MASK64 = (1 << 64) - 1
fallback_seed: int = 0
default_seed: Optional[int] = None


def set_seed(value: Optional[int] = None) -> None:
    """Sets the default seed used when a function is called without one.

    Parameters
    ----------
    value : int, optional
        Seed value. Defaults to ``None``. If ``None``, the seed is reset.
    """
    global default_seed
    default_seed = value


@contextmanager
def seed(value: int) -> Generator:
    """Context manager to set the default seed for reproducability.

    Parameters
    ----------
    value : int
        Seed value.
    """
    previous = default_seed
    set_seed(value)
    try:
        yield
    finally:
        set_seed(previous)


def select_seed(value: Optional[int]) -> int:
    """Selects the seed. Returns the default seed if value is ``None``."""
    if value is not None:
        return value
    return default_seed if default_seed is not None else fallback_seed


def generator(value: Optional[int] = None, stream: int = 0) -> numpy.random.Generator:
    """Returns a Philox generator keyed by ``(seed, stream)``.

    Philox is counter-based, so every ``(seed, stream)`` pair is an independent
    stream and work split into streams gives identical results no matter how
    the streams are distributed over workers.

    Parameters
    ----------
    value : int, optional
        64-bit seed. Defaults to ``None`` (the default seed).
    stream : int, optional
        Stream index. Defaults to ``0``.

    Returns
    -------
    numpy.random.Generator
        Seeded generator.
    """
    key = (select_seed(value) & MASK64) | ((stream & MASK64) << 64)
    return numpy.random.Generator(numpy.random.Philox(key=key))


def random_permutation(d: int, rng: numpy.random.Generator) -> tuple[int, ...]:
    """Returns a uniformly random permutation of ``range(d)`` (Fisher-Yates)."""
    return tuple(int(i) for i in rng.permutation(d))


def random_integers(
    low: int, high: int, size: int, rng: numpy.random.Generator
) -> list[int]:
    """Returns ``size`` integers drawn uniformly from ``[low, high)``."""
    if high - low <= 2**62:
        return [int(v) for v in rng.integers(low, high, size=size)]
    # wider than int64, draw digit by digit
    span = high - low
    n_words = (span.bit_length() + 31) // 32 + 1
    out = []
    for _ in range(size):
        words = rng.integers(0, 2**32, size=n_words, dtype=numpy.uint64)
        value = sum(int(w) << (32 * i) for i, w in enumerate(words))
        out.append(low + value % span)
    return out


def chunk_ranges(total: int, chunk_size: int) -> list[tuple[int, int, int]]:
    """Splits ``range(total)`` into ``(stream, start, stop)`` chunks of fixed size."""
    return [
        (i, start, min(start + chunk_size, total))
        for i, start in enumerate(range(0, total, chunk_size))
    ]


def random_poly(
    spec: Any,
    degree: int,
    rng: numpy.random.Generator,
    monic: bool = False,
    lc: Optional[Any] = None,
) -> Any:
    """Draws a polynomial of exact degree ``degree`` over a finite field.

    Parameters
    ----------
    spec : FieldSpec
        Coefficient field.
    degree : int
        Degree of the polynomial.
    rng : numpy.random.Generator
        Generator to draw the coefficients from.
    monic : bool, optional
        Whether the leading coefficient is ``1``. Defaults to ``False``.
    lc : Raw, optional
        Fixed leading coefficient. Defaults to ``None``.

    Returns
    -------
    Poly
        Random polynomial.
    """
    from ..algebra.polynomials import Poly

    coeffs = [spec.random_element(rng) for _ in range(degree)]
    if monic:
        top = 1
    elif lc is not None:
        top = spec.coerce(lc)
    else:
        top = 0
        while top == 0:
            top = spec.random_element(rng)
    return Poly(spec, coeffs + [top])
