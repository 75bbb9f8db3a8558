"""Genericity condition tests"""

import pytest

from arboreal import CapExceededError, use_caps
from arboreal.algebra import QQ, Poly, UnsupportedFieldError, derivative, field_make
from arboreal.dynamics import (
    CharacteristicError,
    Collision,
    NoCriticalPointsError,
    Verdict,
    char2_cube_check,
    critical_value_poly,
    critical_value_polys,
    is_in_H,
    is_indecomposable_Fq,
    orbit_collision_check,
)
from arboreal.random import generator, random_poly
from tests.utils import max_critical_multiplicity, orbit_collision_by_roots


def test_critical_value_poly() -> None:
    """Test for critical value polynomials over the rationals."""
    x = Poly.x(QQ)
    assert critical_value_poly(x**3 - 3 * x, 1) == x**2 - 4
    assert critical_value_polys(x**2 - 2, 3) == [x + 2, x - 2, x - 2]
    with pytest.raises(NoCriticalPointsError):
        critical_value_poly(x + 1, 1)


def test_orbit_collision_check() -> None:
    """Test for critical orbit collisions."""
    x = Poly.x(QQ)
    assert orbit_collision_check(x**2 - 2, 3) == Collision(3, 2)
    assert orbit_collision_check(x**2 - 2, 2) is None
    assert orbit_collision_check(x**2 + 1, 4) is None
    assert orbit_collision_check(x**2 - 1, 3) == Collision(3, 1)
    assert orbit_collision_check(x**3 - 3 * x, 2) == Collision(2, 1)


def test_orbit_collision_shared_value() -> None:
    """Test for distinct critical points with equal values."""
    x = Poly.x(QQ)
    f = x**4 - 2 * x**2
    assert orbit_collision_check(f, 1) == Collision(1, 1)


def test_char2_cube_check() -> None:
    """Test for points of multiplicity three in characteristic 2."""
    x = Poly.x(field_make(2))
    assert not char2_cube_check(x**5 + x**3)
    assert char2_cube_check(x**3 + x)
    assert char2_cube_check(x**2 + x)
    assert not char2_cube_check(x**4 + x**2)
    assert not char2_cube_check(x**4 + x**3)

    y = Poly.x(field_make(2, 2))
    assert char2_cube_check(y**3 + y)

    with pytest.raises(CharacteristicError):
        char2_cube_check(Poly.x(field_make(3)) ** 3)


def test_is_indecomposable() -> None:
    """Test for functional decompositions over finite fields."""
    x = Poly.x(field_make(3))
    found = is_indecomposable_Fq(x**4 + x**2)
    assert found is not None
    assert found.g == x**2 + x
    assert found.h == x**2
    assert found.compose() == x**4 + x**2

    assert is_indecomposable_Fq(x**4 + x) is None
    assert is_indecomposable_Fq(x**5 + x**2 + 1) is None
    y = Poly.x(field_make(2))
    assert is_indecomposable_Fq(y**4 + y**3) is None

    with pytest.raises(UnsupportedFieldError):
        is_indecomposable_Fq(Poly.x(QQ) ** 4)
    with use_caps(indecomposable_budget=2):
        with pytest.raises(CapExceededError):
            is_indecomposable_Fq(x**4 + x)


@pytest.mark.parametrize("p", [2, 3])
def test_is_indecomposable_composites(p: int) -> None:
    """Test for decompositions of explicit composites."""
    x = Poly.x(field_make(p))
    g, h = x**2 + x + 1, x**3 + x
    found = is_indecomposable_Fq(g(h))
    assert found is not None
    assert found.compose() == g(h)


def test_is_in_H_member() -> None:
    """Test for a member of H over the rationals."""
    x = Poly.x(QQ)
    report = is_in_H(x**2 + 1, 3)
    assert report.overall
    assert report.conditions[1].verdict is Verdict.HOLDS
    assert report.conditions[2].verdict is Verdict.HOLDS
    assert report.conditions[3].verdict is Verdict.NOT_APPLICABLE
    assert report.conditions[4].verdict is Verdict.NOT_APPLICABLE


def test_is_in_H_collision() -> None:
    """Test for a critical orbit collision."""
    x = Poly.x(QQ)
    report = is_in_H(x**2 - 2, 3)
    assert not report.overall
    assert report.conditions[2].verdict is Verdict.FAILS
    assert "(3, 2)" in str(report.conditions[2])


def test_is_in_H_finite_fields() -> None:
    """Test for the conditions in positive characteristic."""
    x = Poly.x(field_make(5))
    report = is_in_H(x**3, 1)
    assert report.conditions[1].verdict is Verdict.FAILS

    report = is_in_H(x**5 + 1, 1)
    assert report.conditions[1].verdict is Verdict.FAILS
    assert report.conditions[2].verdict is Verdict.FAILS
    assert report.conditions[4].verdict is Verdict.FAILS

    y = Poly.x(field_make(2))
    report = is_in_H(y**2 + y, 2)
    assert report.overall
    assert report.conditions[2].witness == "no finite critical points"
    assert report.conditions[3].verdict is Verdict.HOLDS
    assert report.conditions[4].verdict is Verdict.HOLDS

    report = is_in_H(y**4 + y**2 + y, 1)
    assert report.conditions[4].verdict is Verdict.FAILS


def test_is_in_H_invalid() -> None:
    """Test for invalid arguments."""
    x = Poly.x(QQ)
    with pytest.raises(ValueError):
        is_in_H(x + 1, 2)
    with pytest.raises(ValueError):
        is_in_H(x**2, 0)


def _random_instances(
    fields: list[tuple[int, int]], max_degree: int, count: int, seed: int
) -> list[Poly]:
    rng = generator(seed)
    instances = []
    while len(instances) < count:
        p, k = fields[int(rng.integers(len(fields)))]
        f = random_poly(field_make(p, k), int(rng.integers(2, max_degree + 1)), rng)
        instances.append(f)
    return instances


def test_orbit_collision_check_splitting_field() -> None:
    """Test for orbit collisions against critical values in a splitting field."""
    instances = _random_instances([(3, 1), (5, 1), (7, 1), (2, 3), (3, 2)], 4, 300, 11)
    rng = generator(12)
    checked = 0
    for f in instances:
        if derivative(f).degree < 1:
            continue
        N = int(rng.integers(1, 4))
        expected = orbit_collision_by_roots(f, N)
        found = orbit_collision_check(f, N)
        assert found == (Collision(*expected) if expected is not None else None), str(f)
        checked += 1
    assert checked >= 200


def test_char2_cube_check_splitting_field() -> None:
    """Test for triple points against multiplicities in a splitting field."""
    for f in _random_instances([(2, 1), (2, 2), (2, 3)], 6, 300, 13):
        df = derivative(f)
        if df.is_zero:
            expected = False
        elif df.degree == 0:
            expected = True
        else:
            expected = max_critical_multiplicity(f) < 3
        assert char2_cube_check(f) == expected, str(f)
