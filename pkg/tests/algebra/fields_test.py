"""Field tests"""

from fractions import Fraction

import pytest

from arboreal.algebra import (
    QQ,
    ExtensionField,
    FieldMismatchError,
    NotPrimeError,
    PrimeField,
    field_make,
    get_field,
)

testdata = [(2, 1), (5, 1), (2, 2), (2, 3), (3, 2), (5, 2)]


def test_field_make_moduli() -> None:
    """Test for the canonical moduli of small extension fields."""
    assert field_make(2, 2).modulus == (1, 1, 1)
    assert field_make(3, 2).modulus == (1, 0, 1)
    assert field_make(2, 3).modulus == (1, 1, 0, 1)
    assert isinstance(field_make(7), PrimeField)
    assert isinstance(field_make(3, 2), ExtensionField)


def test_field_make_cached() -> None:
    """Test for field identity."""
    assert field_make(3, 2) is field_make(3, 2)
    assert field_make(7) is field_make(7, 1)
    assert field_make(7, k=1) is field_make(p=7)
    assert get_field("q=7") is field_make(7)
    assert get_field("q=9") is field_make(3, 2)
    assert get_field("q=3^2") is field_make(3, 2)
    assert get_field("Q") is QQ


def test_field_make_invalid() -> None:
    """Test for invalid field parameters."""
    with pytest.raises(NotPrimeError):
        field_make(4)
    with pytest.raises(NotPrimeError):
        get_field("q=6")
    with pytest.raises(ValueError):
        get_field("R")


@pytest.mark.parametrize("p,k", testdata)
def test_field_axioms(p: int, k: int) -> None:
    """Test for the field axioms over all elements."""
    spec = field_make(p, k)
    elements = list(spec.elements())
    assert len(elements) == spec.order == p**k
    for a in elements:
        assert spec.add(a, spec.neg(a)) == 0
        assert spec.add(a, 0) == a
        assert spec.mul(a, 1) == a
        if a != 0:
            assert spec.mul(a, spec.inv(a)) == 1
            assert spec.pow(a, spec.order - 1) == 1
        for b in elements[:5]:
            assert spec.add(a, b) == spec.add(b, a)
            assert spec.mul(a, b) == spec.mul(b, a)
            for c in elements[-3:]:
                left = spec.mul(a, spec.add(b, c))
                right = spec.add(spec.mul(a, b), spec.mul(a, c))
                assert left == right


def test_extension_multiplication() -> None:
    """Test for products of the generator in GF(4) and GF(9)."""
    gf4 = field_make(2, 2)
    y = gf4.encode([0, 1])
    assert y == 2
    assert gf4.mul(y, y) == gf4.encode([1, 1])

    gf9 = field_make(3, 2)
    y = gf9.encode([0, 1])
    assert gf9.mul(y, y) == gf9.encode([2, 0])


@pytest.mark.parametrize("p,k", testdata)
def test_pth_root(p: int, k: int) -> None:
    """Test for p-th roots in finite fields."""
    spec = field_make(p, k)
    for a in spec.elements():
        assert spec.pth_root(spec.pow(a, p)) == a


def test_prime_field_coerce() -> None:
    """Test for coercion into prime fields."""
    gf5 = field_make(5)
    assert gf5.coerce(7) == 2
    assert gf5.coerce(-1) == 4
    assert gf5.coerce(Fraction(1, 2)) == 3
    assert gf5.parse("1/3") == 2


def test_extension_format_parse() -> None:
    """Test for the residue text form of extension field elements."""
    gf9 = field_make(3, 2)
    a = gf9.encode([2, 1])
    assert gf9.format(a) == "[2,1]"
    assert gf9.parse("[2,1]") == a
    assert gf9.parse("4") == 1


def test_field_elements() -> None:
    """Test for wrapped field elements."""
    gf7 = field_make(7)
    a = gf7.element(3)
    assert (a * 5).value == 1
    assert (a / a).value == 1
    assert (-a).value == 4
    assert a.inverse().value == 5
    assert (a**6).value == 1
    with pytest.raises(FieldMismatchError):
        _ = a + field_make(5).element(1)

    half = QQ.element(Fraction(1, 2))
    assert (half + half).value == 1
