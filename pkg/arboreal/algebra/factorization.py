"""Factorization of polynomials over finite fields."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy
import sympy

from ..random import generator
from ..wreath.permutations import CyclePattern
from .fields import FieldElem, FiniteField
from .polynomials import (
    Poly,
    ZeroPolynomialError,
    gcd,
    powmod,
    squarefree_decomposition,
    squarefree_test,
)

__all__ = [
    "Factorization",
    "factor",
    "distinct_degree_factorization",
    "equal_degree_factorization",
    "is_irreducible",
    "cycle_pattern_of_poly",
    "NotSquarefreeError",
    "UnsupportedFieldError",
]

logger = logging.getLogger(__name__)


class NotSquarefreeError(Exception):
    """The polynomial has a repeated factor."""

    def __init__(self, message: str = "polynomial is not squarefree.") -> None:
        super().__init__(message)


class UnsupportedFieldError(Exception):
    """The operation is only available over finite fields."""

    def __init__(self, message: str = "operation requires a finite field.") -> None:
        super().__init__(message)


@dataclass(frozen=True)
class Factorization:
    """Complete factorization ``unit * prod f_i^e_i``.

    Attributes
    ----------
    unit : FieldElem
        Leading coefficient of the input.
    factors : tuple[tuple[Poly, int], ...]
        Monic irreducible factors with multiplicities, sorted by degree and then
        by the coefficient vector read as a base-q integer.
    """

    unit: FieldElem
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        """Multiplies the factorization out."""
        result = Poly.constant(self.unit.spec, self.unit.value)
        for g, e in self.factors:
            result = result * g**e
        return result

    @property
    def degrees(self) -> list[int]:
        """Factor degrees, repeated by multiplicity."""
        return [g.degree for g, e in self.factors for _ in range(e)]

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def __str__(self) -> str:
        parts = [f"({g})^{e}" if e > 1 else f"({g})" for g, e in self.factors]
        return " * ".join([str(self.unit)] + parts)


def _finite(f: Poly) -> FiniteField:
    if not isinstance(f.spec, FiniteField):
        raise UnsupportedFieldError(f"Cannot factor over {f.spec.name}.")
    return f.spec


def _frobenius_powers(f: Poly, q: int) -> list[Poly]:
    """``x^(q^i) mod f`` for ``i = 0, ..., deg f``."""
    x = Poly.x(f.spec) % f
    out = [x]
    for _ in range(f.degree):
        out.append(powmod(out[-1], q, f))
    return out


def is_irreducible(f: Poly) -> bool:
    """Rabin irreducibility test over a finite field.

    ``f`` of degree ``n`` is irreducible iff ``x^(q^n) = x mod f`` and
    ``gcd(x^(q^(n/r)) - x, f) = 1`` for every prime ``r | n``.

    Parameters
    ----------
    f : Poly
        Polynomial over a finite field.

    Returns
    -------
    bool
        Whether ``f`` is irreducible. Constants are not irreducible.
    """
    spec = _finite(f)
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    f = f.monic()
    powers = _frobenius_powers(f, spec.order)
    x = powers[0]
    if powers[n] != x:
        return False
    for r in sympy.primefactors(n):
        if gcd(powers[n // r] - x, f).degree > 0:
            return False
    return True


def distinct_degree_factorization(f: Poly) -> list[tuple[Poly, int]]:
    """Splits a monic squarefree ``f`` into products of irreducibles of equal degree.

    Returns pairs ``(g, d)`` where ``g`` is the product of all irreducible factors
    of degree ``d``.
    """
    spec = _finite(f)
    q = spec.order
    out = []
    x = Poly.x(spec)
    h = x % f if f.degree > 0 else x
    i = 1
    while f.degree >= 2 * i:
        h = powmod(h, q, f)
        g = gcd(f, h - x)
        if g.degree > 0:
            out.append((g, i))
            f = f // g
            h = h % f
        i += 1
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _random_poly(spec: FiniteField, degree: int, rng: numpy.random.Generator) -> Poly:
    return Poly(spec, [spec.random_element(rng) for _ in range(degree)])


def _trace_map(a: Poly, m: int, f: Poly) -> Poly:
    """``a + a^2 + a^4 + ... + a^(2^(m-1)) mod f``."""
    t = a % f
    s = t
    for _ in range(m - 1):
        t = (t * t) % f
        s = s + t
    return s


def equal_degree_factorization(
    f: Poly, d: int, rng: numpy.random.Generator
) -> list[Poly]:
    """Splits a monic squarefree ``f`` whose irreducible factors all have degree ``d``.

    Odd characteristic uses Cantor-Zassenhaus splitting with ``a^((q^d - 1)/2) - 1``,
    characteristic 2 uses the absolute trace of ``a`` to GF(2).

    Parameters
    ----------
    f : Poly
        Monic squarefree polynomial over a finite field.
    d : int
        Degree of every irreducible factor of ``f``.
    rng : numpy.random.Generator
        Generator for the random splitting polynomials.

    Returns
    -------
    list[Poly]
        The irreducible factors (unsorted).
    """
    spec = _finite(f)
    if f.degree == d:
        return [f]
    q = spec.order
    one = Poly.one(spec)
    while True:
        a = _random_poly(spec, f.degree, rng)
        if a.degree <= 0:
            continue
        if spec.p == 2:
            b = _trace_map(a, spec.k * d, f)
        else:
            b = powmod(a, (q**d - 1) // 2, f) - one
        g = gcd(f, b)
        if 0 < g.degree < f.degree:
            break
    return equal_degree_factorization(g, d, rng) + equal_degree_factorization(
        f // g, d, rng
    )


def factor(f: Poly, seed: Optional[int] = None) -> Factorization:
    """Factors a polynomial over a finite field.

    Squarefree, distinct-degree and randomized equal-degree splitting. The result
    does not depend on the seed: the factors are sorted by degree and then by the
    coefficient vector read as a base-q integer.

    Parameters
    ----------
    f : Poly
        Nonzero polynomial over a finite field.
    seed : int, optional
        Seed for equal-degree splitting. Defaults to ``None`` (default seed).

    Returns
    -------
    Factorization
        The factorization.

    Raises
    ------
    UnsupportedFieldError
        If ``f`` is defined over the rationals.
    ZeroPolynomialError
        If ``f`` is zero.
    """
    spec = _finite(f)
    if f.is_zero:
        raise ZeroPolynomialError()
    rng = generator(seed)
    factors: list[tuple[Poly, int]] = []
    for g, e in squarefree_decomposition(f):
        for h, d in distinct_degree_factorization(g):
            factors.extend((u, e) for u in equal_degree_factorization(h, d, rng))
    factors.sort(key=lambda t: t[0].sort_key())
    logger.debug("factored degree %d polynomial into %d factors", f.degree, len(factors))
    return Factorization(FieldElem(spec, f.lc), tuple(factors))


def cycle_pattern_of_poly(f: Poly) -> CyclePattern:
    """Cycle pattern of a squarefree polynomial: one part per irreducible factor degree.

    Parameters
    ----------
    f : Poly
        Nonconstant squarefree polynomial over a finite field.

    Returns
    -------
    CyclePattern
        Pattern ``(1)^r_1 ... (m)^r_m`` with ``r_i`` factors of degree ``i``.

    Raises
    ------
    NotSquarefreeError
        If ``f`` has a repeated factor.
    """
    _finite(f)
    if f.degree < 1:
        raise ValueError("Cycle patterns need a nonconstant polynomial.")
    if not squarefree_test(f):
        raise NotSquarefreeError(f"{f} is not squarefree.")
    degrees: list[int] = []
    for h, d in distinct_degree_factorization(f.monic()):
        degrees.extend([d] * (h.degree // d))
    return CyclePattern.from_lengths(degrees)
