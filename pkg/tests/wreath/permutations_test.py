"""Permutation and cycle pattern tests"""

import pytest
from sympy.combinatorics import Permutation

from arboreal.random import generator, random_permutation
from arboreal.wreath import CyclePattern, Perm


def test_cycle_pattern_text() -> None:
    """Test for the text form of cycle patterns."""
    pattern = CyclePattern.parse("1^3 2^1")
    assert pattern.degree == 5
    assert str(pattern) == "1^3 2^1"
    assert str(CyclePattern.parse("4")) == "4^1"
    assert CyclePattern.parse(" 2^1 1^2 ") == CyclePattern.from_lengths([1, 2, 1])
    assert pattern.lengths == [1, 1, 1, 2]

    with pytest.raises(ValueError):
        CyclePattern.parse("")
    with pytest.raises(ValueError):
        CyclePattern.parse("2^x")


def test_cycle_pattern_validation() -> None:
    """Test for invalid cycle patterns."""
    with pytest.raises(ValueError):
        CyclePattern(3, ((2, 1),))
    with pytest.raises(ValueError):
        CyclePattern(4, ((2, 1), (1, 2)))
    with pytest.raises(ValueError):
        CyclePattern(2, ((1, 0), (2, 1)))


def test_cycle_pattern_queries() -> None:
    """Test for multiplicities and fixed points."""
    pattern = CyclePattern.parse("1^2 3^2")
    assert pattern.multiplicity(3) == 2
    assert pattern.multiplicity(2) == 0
    assert pattern.fixed_points == 2
    assert pattern.has_fixed_point
    assert not CyclePattern.parse("2^2").has_fixed_point


def test_cycle_pattern_order() -> None:
    """Test for the total order of cycle patterns."""
    patterns = [CyclePattern.parse(t) for t in ["4^1", "1^4", "2^2", "1^2 2^1"]]
    assert [str(p) for p in sorted(patterns)] == ["1^2 2^1", "1^4", "2^2", "4^1"]


def test_perm() -> None:
    """Test for permutations in one-line notation."""
    a = Perm.from_cycles([(0, 1, 2)], 4)
    assert a.images == (1, 2, 0, 3)
    assert a.cycles() == [(0, 1, 2), (3,)]
    assert a.cycle_pattern() == CyclePattern.parse("1^1 3^1")
    assert a.fixed_points == [3]
    assert (a * a.inverse()).is_identity

    b = Perm.from_cycles([(0, 3)], 4)
    assert b.is_transposition
    assert not a.is_transposition
    assert (a * b).images == (3, 2, 0, 1)

    with pytest.raises(ValueError):
        Perm([0, 0, 1])
    with pytest.raises(ValueError):
        _ = a * Perm.identity(3)


@pytest.mark.parametrize("degree", [1, 2, 5, 9, 16])
def test_cycle_pattern_against_sympy(degree: int) -> None:
    """Test for cycle patterns against sympy cycle structures."""
    rng = generator(3)
    for _ in range(20):
        images = random_permutation(degree, rng)
        pattern = Perm(images).cycle_pattern()
        assert dict(pattern.parts) == Permutation(list(images)).cycle_structure
