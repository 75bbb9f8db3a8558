"""Parametric discriminant tests"""

import pytest

from arboreal.algebra import QQ, Poly, field_make, radical, resultant
from arboreal.dynamics import (
    InseparableMapError,
    RationalMap,
    disc_iterate_radical,
    disc_param,
)
from arboreal.random import generator, random_poly


def test_disc_param_square() -> None:
    """Test for the discriminant of x^2 - T."""
    x = Poly.x(QQ)
    result = disc_param(x**2)
    assert result.delta == x
    assert result.critical_product == ((x, 1),)


def test_disc_param_cubic() -> None:
    """Test for the discriminant of x^3 - 3x - T."""
    x = Poly.x(QQ)
    result = disc_param(x**3 - 3 * x)
    assert result.delta == x**2 - 4
    assert result.critical_product == ((x**2 - 4, 1),)
    assert result.expand_product() == result.delta


def test_disc_param_multiplicity() -> None:
    """Test for exponents of degenerate critical points."""
    x = Poly.x(QQ)
    result = disc_param(x**3)
    assert result.delta == x**2
    assert result.critical_product == ((x, 2),)

    result = disc_param((x**2 - 1) ** 2)
    assert result.expand_product() == result.delta
    assert result.delta == x**2 * (x - 1)


def test_disc_param_rational_map() -> None:
    """Test for the discriminant of a rational map."""
    x = Poly.x(QQ)
    result = disc_param(RationalMap(x**2 + 1, x))
    assert result.delta == x**2 - 4
    assert result.critical_product == ((x**2 - 4, 1),)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_disc_param_finite_field(p: int) -> None:
    """Test for agreement of both forms over finite fields."""
    x = Poly.x(field_make(p))
    for f in [x**3 + 2 * x + 1, x**4 + x**3 + 3, x**5 + 2 * x**2 + x]:
        if f.degree % p == 0:
            continue
        result = disc_param(f)
        assert result.expand_product() == result.delta


def test_disc_param_inseparable() -> None:
    """Test for inseparable fibers."""
    x = Poly.x(field_make(2))
    with pytest.raises(InseparableMapError):
        disc_param(x**2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_disc_iterate_radical(n: int) -> None:
    """Test for iterate discriminants supported on critical orbits."""
    x = Poly.x(QQ)
    result = disc_iterate_radical(x**2 - 2, n)
    assert result.matches_critical_orbit
    result = disc_iterate_radical(x**2 + 1, n)
    assert result.matches_critical_orbit
    assert result.radical.degree == n


def test_disc_iterate_radical_example() -> None:
    """Test for the iterate discriminant of x^2 - 2."""
    x = Poly.x(QQ)
    result = disc_iterate_radical(x**2 - 2, 2)
    assert result.radical == x**2 - 4
    assert result.critical_orbit == x**2 - 4


def test_disc_iterate_radical_finite_field() -> None:
    """Test for iterate discriminants over a finite field."""
    x = Poly.x(field_make(7))
    assert disc_iterate_radical(x**3 + 2 * x + 1, 2).matches_critical_orbit


def _random_maps(fields: list, count: int, seed: int) -> list[RationalMap]:
    rng = generator(seed)
    maps: list[RationalMap] = []
    while len(maps) < count:
        spec = fields[int(rng.integers(len(fields)))]
        num = random_poly(spec, int(rng.integers(1, 5)), rng)
        den = random_poly(spec, int(rng.integers(0, 4)), rng, monic=True)
        if max(num.degree, den.degree) < 2 or resultant(num, den).value == 0:
            continue
        maps.append(RationalMap(num, den))
    return maps


@pytest.mark.parametrize(
    "fields,count,seed",
    [
        ([field_make(3), field_make(5), field_make(7), field_make(11), field_make(3, 2)], 200, 21),
        ([QQ], 50, 22),
    ],
)
def test_disc_param_radicals(fields: list, count: int, seed: int) -> None:
    """Test for equal radicals of the resultant and critical-product forms."""
    for phi in _random_maps(fields, count, seed):
        try:
            result = disc_param(phi)
        except InseparableMapError:
            continue
        assert radical(result.delta) == radical(result.expand_product()), str(phi)
