"""Polynomial and rational maps, their iterates and critical points."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import regex

from ..algebra.fields import FieldLike, FieldSpec, Raw, get_field
from ..algebra.polynomials import (
    Poly,
    compose,
    derivative,
    divrem,
    gcd,
    parse_poly,
    radical,
)
from ..algebra.resultants import resultant
from ..caps import check_cap

__all__ = [
    "RationalMap",
    "CriticalData",
    "InseparableMapError",
    "NoCriticalPointsError",
    "iterate",
    "compose_maps",
    "iterate_map",
    "critical_data",
    "compose_mod",
    "parse_map",
]

logger = logging.getLogger(__name__)


class InseparableMapError(Exception):
    """The derivative of the map vanishes identically."""

    def __init__(self, message: str = "map is inseparable (its derivative is zero).") -> None:
        super().__init__(message)


class NoCriticalPointsError(Exception):
    """The map has no finite critical points."""

    def __init__(self, message: str = "map has no finite critical points.") -> None:
        super().__init__(message)


@dataclass(frozen=True)
class RationalMap:
    """Rational map ``phi = p / q`` with coprime numerator and denominator.

    A polynomial map has denominator ``1``. The denominator is kept monic.

    Parameters
    ----------
    num : Poly
        Numerator ``p``.
    den : Poly
        Denominator ``q``.
    """

    num: Poly
    den: Poly

    def __post_init__(self) -> None:
        if self.num.spec != self.den.spec:
            raise ValueError("numerator and denominator belong to different fields.")
        if self.den.is_zero:
            raise ZeroDivisionError("denominator is zero.")
        if resultant(self.num, self.den).value == 0:
            raise ValueError("numerator and denominator share a root.")
        if self.degree < 1:
            raise ValueError("map must be nonconstant.")
        if not self.den.is_monic:
            c = self.spec.inv(self.den.lc)
            object.__setattr__(self, "num", self.num.scale(c))
            object.__setattr__(self, "den", self.den.scale(c))

    @classmethod
    def from_poly(cls, f: Poly) -> RationalMap:
        return cls(f, Poly.one(f.spec))

    @property
    def spec(self) -> FieldSpec:
        return self.num.spec

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __call__(self, x: Raw) -> Optional[Raw]:
        """Evaluates at a raw field value; returns ``None`` at a pole."""
        q = self.den.evaluate(x)
        if q == 0:
            return None
        return self.spec.div(self.num.evaluate(x), q)

    def __str__(self) -> str:
        return f"num={self.num};den={self.den}"


@dataclass(frozen=True)
class CriticalData:
    """Critical points of a map.

    Attributes
    ----------
    map : RationalMap
        The map.
    crit_poly : Poly
        ``p' q - p q'`` (``f'`` for polynomials).
    crit_radical : Poly
        Monic squarefree polynomial whose roots are the finite critical points. In
        characteristic 2 with ``f' = h^2`` this is the radical of ``h``.
    """

    map: RationalMap
    crit_poly: Poly
    crit_radical: Poly

    @property
    def has_critical_points(self) -> bool:
        return self.crit_radical.degree > 0


def _bits(f: Poly) -> int:
    bits = 0
    for c in f.coeffs:
        c = Fraction(c)
        bits = max(bits, c.numerator.bit_length(), c.denominator.bit_length())
    return bits


def iterate(f: Poly, n: int) -> Poly:
    """``n``-fold composition ``f o f o ... o f``.

    Parameters
    ----------
    f : Poly
        Polynomial.
    n : int
        Number of iterations, ``n >= 1``.

    Returns
    -------
    Poly
        The iterate ``f^n``.

    Raises
    ------
    CapExceededError
        Over the rationals, if a coefficient numerator or denominator grows beyond
        the ``q_bits`` cap.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")
    guard = f.spec.characteristic == 0
    g = f
    for _ in range(n - 1):
        g = compose(f, g)
        if guard:
            check_cap("q_bits", _bits(g), "coefficient bit size")
    logger.debug("iterate %d of degree %d polynomial has degree %d", n, f.degree, g.degree)
    return g


def compose_mod(f: Poly, g: Poly, m: Poly) -> Poly:
    """``f(g(x)) mod m`` by Horner's rule with reduction."""
    result = Poly.zero(f.spec)
    g = g % m
    for c in reversed(f.coeffs):
        result = (result * g + Poly(f.spec, (c,))) % m
    return result


def _homogenize(f: Poly, a: Poly, b: Poly, d: int) -> Poly:
    """``sum_i f_i a^i b^(d-i)``."""
    result = Poly.zero(f.spec)
    for i, c in enumerate(f.coeffs):
        if c:
            result = result + (a**i * b ** (d - i)).scale(c)
    return result


def compose_maps(phi: RationalMap, psi: RationalMap) -> RationalMap:
    """Composition ``phi o psi`` of two rational maps."""
    if phi.spec != psi.spec:
        raise ValueError("maps belong to different fields.")
    if phi.is_polynomial and psi.is_polynomial:
        return RationalMap.from_poly(compose(phi.num, psi.num))
    d = phi.degree
    num = _homogenize(phi.num, psi.num, psi.den, d)
    den = _homogenize(phi.den, psi.num, psi.den, d)
    g = gcd(num, den)
    if g.degree > 0:
        num, den = divrem(num, g)[0], divrem(den, g)[0]
    return RationalMap(num, den)


def iterate_map(phi: RationalMap, n: int) -> RationalMap:
    """``n``-fold composition of a rational map."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")
    result = phi
    for _ in range(n - 1):
        result = compose_maps(phi, result)
    return result


def critical_data(phi: RationalMap | Poly) -> CriticalData:
    """Critical polynomial and critical radical of a map.

    Raises
    ------
    InseparableMapError
        If the derivative vanishes identically.
    """
    if isinstance(phi, Poly):
        phi = RationalMap.from_poly(phi)
    p, q = phi.num, phi.den
    crit = derivative(p) * q - p * derivative(q)
    if crit.is_zero:
        raise InseparableMapError()
    return CriticalData(phi, crit, radical(crit))


def parse_map(text: str, field: FieldLike) -> RationalMap:
    """Parses ``"num=<poly>;den=<poly>"`` or a bare polynomial string."""
    spec = get_field(field)
    match = regex.fullmatch(r"\s*num\s*=\s*([^;]+?)\s*(?:;\s*den\s*=\s*(.+?)\s*)?", text)
    if match is None:
        return RationalMap.from_poly(parse_poly(text, spec))
    num = parse_poly(match.group(1), spec)
    den: Optional[Poly] = parse_poly(match.group(2), spec) if match.group(2) else None
    return RationalMap(num, den if den is not None else Poly.one(spec))
