"""Polynomial tests"""

from fractions import Fraction

import pytest

from arboreal.algebra import (
    QQ,
    Poly,
    ZeroPolynomialError,
    compose,
    derivative,
    divrem,
    field_make,
    format_poly,
    gcd,
    gcdex,
    hasse_derivative,
    invmod,
    parse_poly,
    poly,
    powmod,
    radical,
    squarefree_decomposition,
    squarefree_test,
)
from arboreal.random import generator, random_poly
from tests.utils import get_random_polys

testdata = [(2, 1), (3, 1), (7, 1), (2, 2), (3, 2), (7, 2)]
property_data = [(2, 1), (3, 1), (5, 1), (7, 2)]


def test_parse_format() -> None:
    """Test for the comma separated coefficient format."""
    f = parse_poly("1, 0, 1", "q=5")
    assert f == Poly(field_make(5), [1, 0, 1])
    assert format_poly(f) == "1,0,1"
    assert format_poly(Poly.zero(QQ)) == "0"

    g = parse_poly("1/2,-3", "Q")
    assert g.coeffs == (Fraction(1, 2), Fraction(-3))
    assert format_poly(g) == "1/2,-3"

    h = parse_poly("[0,1],1", "q=9")
    assert h.coeffs == (3, 1)
    assert format_poly(h) == "[0,1],[1,0]"

    with pytest.raises(ValueError):
        parse_poly(" ", "Q")


def test_poly_strips_zeros() -> None:
    """Test for the normalized coefficient tuple."""
    f = poly([1, 2, 0, 5], "q=5")
    assert f.coeffs == (1, 2)
    assert f.degree == 1
    assert Poly.zero(QQ).degree == -1
    assert Poly.zero(QQ).is_zero
    assert Poly.constant(QQ, 3).is_constant


def test_arithmetic() -> None:
    """Test for ring operations over the rationals."""
    x = Poly.x(QQ)
    assert (x + 1) ** 2 == x * x + 2 * x + 1
    assert (x + 1) * (x - 1) == x**2 - 1
    assert (x**2 - 1) // (x - 1) == x + 1
    assert (x**2 + 1) % (x - 1) == 2
    assert (x**2)(x + 1) == x**2 + 2 * x + 1
    assert (x**2 + 1)(3) == 10


@pytest.mark.parametrize("p,k", testdata)
def test_divrem(p: int, k: int) -> None:
    """Test for division with remainder."""
    fs = get_random_polys(p, 7, 5, k)
    gs = get_random_polys(p, 3, 5, k)
    for f, g in zip(fs, gs):
        q, r = divrem(f, g)
        assert q * g + r == f
        assert r.degree < g.degree

    with pytest.raises(ZeroDivisionError):
        divrem(fs[0], Poly.zero(fs[0].spec))


@pytest.mark.parametrize("p,k", testdata)
def test_gcdex(p: int, k: int) -> None:
    """Test for the extended Euclidean algorithm."""
    fs = get_random_polys(p, 6, 4, k)
    gs = get_random_polys(p, 4, 4, k)
    for f, g in zip(fs, gs):
        h, s, t = gcdex(f, g)
        assert s * f + t * g == h
        assert h == gcd(f, g)
        assert h.is_monic
        assert (f % h).is_zero and (g % h).is_zero


@pytest.mark.parametrize("p,k", property_data)
def test_divrem_gcd_properties(p: int, k: int) -> None:
    """Test for division and gcds of random pairs with a planted common divisor."""
    spec = field_make(p, k)
    rng = generator(200 + p)
    for _ in range(200):
        f = random_poly(spec, int(rng.integers(0, 9)), rng)
        g = random_poly(spec, int(rng.integers(1, 6)), rng)
        q, r = divrem(f, g)
        assert q * g + r == f
        assert r.is_zero or r.degree < g.degree

        c = random_poly(spec, int(rng.integers(1, 3)), rng)
        h = gcd(f * c, g * c)
        assert (f * c % h).is_zero and (g * c % h).is_zero
        assert (h % c).is_zero


def test_gcd() -> None:
    """Test for monic gcds."""
    x = Poly.x(QQ)
    assert gcd(x**2 - 1, x**2 + 2 * x + 1) == x + 1
    assert gcd(3 * x + 3, Poly.zero(QQ)) == x + 1
    assert gcd(Poly.zero(QQ), Poly.zero(QQ)).is_zero


def test_invmod_powmod() -> None:
    """Test for modular inverses and powers."""
    gf5 = field_make(5)
    x = Poly.x(gf5)
    m = x**2 + 2
    f = 3 * x + 1
    assert (invmod(f, m) * f) % m == 1
    assert powmod(f, 13, m) == (f**13) % m
    with pytest.raises(ZeroDivisionError):
        invmod(x - 2, x**2 - 4)


@pytest.mark.parametrize("p,k", testdata)
def test_compose(p: int, k: int) -> None:
    """Test for composition against pointwise evaluation."""
    f, g = get_random_polys(p, 3, 2, k)
    fg = compose(f, g)
    assert fg.degree == 9
    for a in f.spec.elements():
        assert fg.evaluate(a) == f.evaluate(g.evaluate(a))


def test_hasse_derivative() -> None:
    """Test for derivatives in positive characteristic."""
    gf2 = field_make(2)
    x = Poly.x(gf2)
    assert derivative(x**2).is_zero
    assert hasse_derivative(x**2, 2) == 1
    assert hasse_derivative(x**3, 2) == x
    assert hasse_derivative(x**3, 0) == x**3

    x = Poly.x(QQ)
    assert derivative(x**3 + x) == 3 * x**2 + 1
    assert hasse_derivative(x**4, 2) == 6 * x**2


def test_squarefree_test() -> None:
    """Test for the squarefree test."""
    gf5 = field_make(5)
    x = Poly.x(gf5)
    assert squarefree_test(x**2 + 1)
    assert not squarefree_test((x + 1) ** 2 * (x + 3))
    assert squarefree_test(Poly.constant(gf5, 2))

    gf2 = field_make(2)
    assert not squarefree_test(Poly.x(gf2) ** 2 + 1)

    with pytest.raises(ZeroPolynomialError):
        squarefree_test(Poly.zero(gf5))


def test_squarefree_decomposition() -> None:
    """Test for squarefree decompositions in zero and positive characteristic."""
    x = Poly.x(QQ)
    f = 2 * (x - 1) ** 2 * (x + 1)
    assert squarefree_decomposition(f) == [(x + 1, 1), (x - 1, 2)]

    gf5 = field_make(5)
    x = Poly.x(gf5)
    f = x * (x + 1) ** 2 * (x + 2) ** 3
    assert squarefree_decomposition(f) == [(x, 1), (x + 1, 2), (x + 2, 3)]

    gf3 = field_make(3)
    x = Poly.x(gf3)
    assert squarefree_decomposition(x * (x + 1) ** 3) == [(x, 1), (x + 1, 3)]
    assert squarefree_decomposition((x + 2) ** 6) == [(x + 2, 6)]


@pytest.mark.parametrize("p,k", testdata)
def test_squarefree_decomposition_product(p: int, k: int) -> None:
    """Test for the product of a squarefree decomposition."""
    a, b, c = get_random_polys(p, 2, 3, k, monic=True)
    f = a * b**2 * c**p
    result = Poly.one(f.spec)
    for g, e in squarefree_decomposition(f):
        assert squarefree_test(g)
        result = result * g**e
    assert result == f
    assert squarefree_test(radical(f))


def test_radical() -> None:
    """Test for radicals."""
    gf2 = field_make(2)
    x = Poly.x(gf2)
    assert radical(x**2) == x
    assert radical(x**4 * (x + 1)) == x**2 + x


@pytest.mark.parametrize("p,k", property_data)
def test_hasse_derivative_multiplicity(p: int, k: int) -> None:
    """Test for Hasse derivatives that vanish at a root of multiplicity m below m."""
    spec = field_make(p, k)
    rng = generator(300 + p)
    x = Poly.x(spec)
    for _ in range(50):
        b = spec.random_element(rng)
        m = int(rng.integers(1, 5))
        u = random_poly(spec, int(rng.integers(0, 4)), rng)
        while u.evaluate(b) == 0:
            u = u + 1
        f = (x - Poly.constant(spec, b)) ** m * u
        for j in range(1, m):
            assert hasse_derivative(f, j).evaluate(b) == 0
        assert hasse_derivative(f, m).evaluate(b) != 0


@pytest.mark.parametrize("p,k", property_data)
def test_radical_divides_power(p: int, k: int) -> None:
    """Test for squarefree radicals that divide f^deg f."""
    spec = field_make(p, k)
    rng = generator(400 + p)
    for _ in range(50):
        a = random_poly(spec, int(rng.integers(1, 3)), rng)
        b = random_poly(spec, int(rng.integers(1, 3)), rng)
        f = a ** int(rng.integers(1, 4)) * b ** int(rng.integers(1, 2 * p + 1))
        rad = radical(f)
        assert squarefree_test(rad)
        assert powmod(f, f.degree, rad).is_zero
        assert rad.degree <= f.degree
