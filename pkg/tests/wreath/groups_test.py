"""Permutation group tests"""

import math

import pytest

from arboreal import CapExceededError
from arboreal.random import generator, random_permutation
from arboreal.wreath import (
    Perm,
    group_closure,
    is_primitive,
    is_transitive,
    minimal_block,
)
from tests.utils import sympy_group, transposition


def test_symmetric_group() -> None:
    """Test for S_3 from a transposition and a 3-cycle."""
    group = group_closure([transposition(3, 0, 1), Perm.from_cycles([(0, 1, 2)], 3)])
    assert group.order == 6
    assert group.has_transposition
    assert is_transitive(group)
    assert is_primitive(group)
    assert Perm([2, 1, 0]) in group


def test_dihedral_group() -> None:
    """Test for the imprimitive dihedral group of the square."""
    group = group_closure([Perm.from_cycles([(0, 1, 2, 3)], 4), transposition(4, 0, 2)])
    assert group.order == 8
    assert is_transitive(group)
    assert not is_primitive(group)
    assert minimal_block(group, 2) == {0, 2}
    assert minimal_block(group, 1) == {0, 1, 2, 3}


def test_intransitive_group() -> None:
    """Test for groups that fix a point."""
    group = group_closure([transposition(3, 0, 1)])
    assert group.order == 2
    assert group.orbit(2) == {2}
    assert not is_transitive(group)
    assert not is_primitive(group)


def test_trivial_group() -> None:
    """Test for the trivial group on one point."""
    group = group_closure([], degree=1)
    assert group.order == 1
    assert is_primitive(group)


def test_closure_cap() -> None:
    """Test for the closure cap."""
    gens = [transposition(5, 0, 1), Perm.from_cycles([(0, 1, 2, 3, 4)], 5)]
    with pytest.raises(CapExceededError):
        group_closure(gens, cap=100)
    assert group_closure(gens, cap=120).order == 120
    with pytest.raises(ValueError):
        group_closure([transposition(3, 0, 1), transposition(4, 0, 1)])


@pytest.mark.parametrize("degree", [3, 4, 5, 6, 7, 8])
def test_groups_against_sympy(degree: int) -> None:
    """Test for group orders and primitivity against sympy."""
    rng = generator(degree)
    for _ in range(15):
        count = int(rng.integers(1, 3))
        gens = [Perm(random_permutation(degree, rng)) for _ in range(count)]
        group = group_closure(gens)
        reference = sympy_group(gens, degree)
        assert group.order == reference.order()
        if is_transitive(group):
            assert reference.is_transitive()
            assert is_primitive(group) == reference.is_primitive(randomized=False)


def _spanning_transpositions(degree: int, rng) -> list[Perm]:
    # random labelled tree on the points, then a few extra edges
    order = [int(v) for v in rng.permutation(degree)]
    gens = [
        transposition(degree, order[i], order[int(rng.integers(i))]) for i in range(1, degree)
    ]
    for _ in range(int(rng.integers(0, 3))):
        i, j = (int(v) for v in rng.choice(degree, size=2, replace=False))
        gens.append(transposition(degree, i, j))
    return gens


def test_transpositions_generate_symmetric_group() -> None:
    """Test for transitive groups generated by transpositions on up to 8 points."""
    rng = generator(300)
    for _ in range(200):
        degree = int(rng.integers(2, 9))
        group = group_closure(_spanning_transpositions(degree, rng))
        assert is_transitive(group)
        assert group.order == math.factorial(degree)


def test_primitive_transposition_groups() -> None:
    """Test for primitive groups with a transposition on up to 8 points."""
    rng = generator(400)
    found = 0
    for _ in range(1000):
        degree = int(rng.integers(2, 9))
        i, j = (int(v) for v in rng.choice(degree, size=2, replace=False))
        gens = [transposition(degree, i, j), Perm(random_permutation(degree, rng))]
        group = group_closure(gens)
        assert group.has_transposition
        if is_primitive(group):
            assert group.order == math.factorial(degree)
            found += 1
            if found == 200:
                break
    assert found == 200
