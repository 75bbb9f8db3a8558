"""Random generator tests"""

from collections import Counter

import pytest

from arboreal.parallel import map_chunks, merge_counters
from arboreal.random import (
    chunk_ranges,
    generator,
    random_integers,
    random_permutation,
    seed,
    select_seed,
)


def _draws(stream_seed: int, stream: int, start: int, stop: int) -> Counter:
    rng = generator(stream_seed, stream)
    return Counter(random_integers(0, 5, stop - start, rng))


def test_select_seed() -> None:
    """Test for the default seed."""
    assert select_seed(3) == 3
    with seed(42):
        assert select_seed(None) == 42
        assert select_seed(7) == 7
    assert select_seed(None) == 0


def test_generator_streams() -> None:
    """Test for independent and reproducible streams."""
    a = random_integers(0, 1000, 20, generator(1, 0))
    assert a == random_integers(0, 1000, 20, generator(1, 0))
    assert a != random_integers(0, 1000, 20, generator(1, 1))
    assert a != random_integers(0, 1000, 20, generator(2, 0))


def test_random_integers_wide() -> None:
    """Test for draws wider than 64 bits."""
    low, high = 2**70, 2**70 + 3 * 2**65
    values = random_integers(low, high, 50, generator(5))
    assert all(low <= v < high for v in values)


@pytest.mark.parametrize("d", [1, 2, 5])
def test_random_permutation(d: int) -> None:
    """Test for random permutations."""
    p = random_permutation(d, generator(d))
    assert sorted(p) == list(range(d))


def test_chunk_ranges() -> None:
    """Test for fixed-size chunks."""
    assert chunk_ranges(10, 4) == [(0, 0, 4), (1, 4, 8), (2, 8, 10)]
    assert chunk_ranges(0, 4) == []


def test_map_chunks() -> None:
    """Test for chunked tallies."""
    chunks = map_chunks(_draws, 1000, (9,), chunk_size=100)
    assert len(chunks) == 10
    total = merge_counters(chunks)
    assert sum(total.values()) == 1000
    assert set(total) <= set(range(5))
    assert total == merge_counters(map_chunks(_draws, 1000, (9,), chunk_size=100))
