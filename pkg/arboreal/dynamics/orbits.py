"""Forward orbits of rational points reduced modulo primes."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

import sympy

from ..algebra.fields import QQ
from ..algebra.polynomials import Poly

__all__ = ["BadPrimeError", "reduce_mod_p", "orbit_mod_p", "orbit_hits_zero_mod_p"]


class BadPrimeError(Exception):
    """The prime divides a denominator or the leading coefficient."""


def _residue(c: Any, p: int) -> int:
    c = Fraction(c)
    if c.denominator % p == 0:
        raise BadPrimeError(f"{p} divides the denominator of {c}.")
    return c.numerator * pow(c.denominator, -1, p) % p


def reduce_mod_p(f: Poly, p: int) -> list[int]:
    """Coefficients of a rational polynomial reduced modulo a good prime ``p``.

    Raises
    ------
    BadPrimeError
        If ``p`` divides a coefficient denominator or the leading coefficient.
    """
    if f.spec != QQ:
        raise ValueError(f"Expected a polynomial over Q, got {f.spec.name}.")
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime.")
    coeffs = [_residue(c, p) for c in f.coeffs]
    if not coeffs or coeffs[-1] == 0:
        raise BadPrimeError(f"{p} divides the leading coefficient.")
    return coeffs


def _horner(coeffs: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def orbit_mod_p(f: Poly, a0: Any, p: int) -> tuple[list[int], int]:
    """Orbit ``f(a0), f^2(a0), ...`` modulo ``p`` until it repeats.

    Returns
    -------
    tuple[list[int], int]
        The distinct residues in order of appearance and the index in that list
        where the periodic part starts.
    """
    coeffs = reduce_mod_p(f, p)
    x = _horner(coeffs, _residue(a0, p), p)
    index: dict[int, int] = {}
    orbit: list[int] = []
    while x not in index:
        index[x] = len(orbit)
        orbit.append(x)
        x = _horner(coeffs, x, p)
    return orbit, index[x]


def orbit_hits_zero_mod_p(f: Poly, a0: Any, p: int) -> bool:
    """Whether ``f^n(a0) = 0 mod p`` for some ``n >= 1``.

    Parameters
    ----------
    f : Poly
        Polynomial over the rationals.
    a0 : Any
        Rational starting point.
    p : int
        Prime not dividing any denominator of ``f`` or ``a0`` nor the leading
        coefficient of ``f``.

    Returns
    -------
    bool
        Whether ``p`` divides some iterate value.

    Raises
    ------
    BadPrimeError
        If ``p`` is a bad prime for ``(f, a0)``.
    """
    coeffs = reduce_mod_p(f, p)
    x = _horner(coeffs, _residue(a0, p), p)
    seen = set()
    while x not in seen:
        if x == 0:
            return True
        seen.add(x)
        x = _horner(coeffs, x, p)
    return False
