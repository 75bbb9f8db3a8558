"""Densities of primes dividing some forward iterate of a rational point."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

import numpy

from ..algebra.fields import QQ
from ..algebra.polynomials import Poly
from ..dynamics.orbits import BadPrimeError, orbit_hits_zero_mod_p
from ..utils import track
from ..wreath.distributions import fpp, fpp_threshold

__all__ = ["OrbitDensityReport", "orbit_prime_density", "primes_up_to", "LADDER_DEPTH"]

logger = logging.getLogger(__name__)

LADDER_DEPTH = 8


def primes_up_to(x: int) -> list[int]:
    """Primes ``p <= x`` by the sieve of Eratosthenes."""
    if x < 2:
        return []
    sieve = numpy.ones(x + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(x**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return [int(p) for p in numpy.flatnonzero(sieve)]


@dataclass(frozen=True)
class OrbitDensityReport:
    """Primes up to ``X`` dividing some ``f^n(a0)``, ``n >= 1``.

    Attributes
    ----------
    f : Poly
        Polynomial over the rationals.
    a0 : Fraction
        Starting point.
    X : int
        Prime bound.
    good_primes : int
        Number of good primes ``p <= X``.
    dividing : int
        Number of good primes dividing some iterate value.
    bad_primes : tuple[int, ...]
        Primes dividing a denominator or the leading coefficient.
    fpp_ladder : tuple[Fraction, ...]
        ``FPP([S_d]^m)`` for ``m = 1, ..., 8``, ``d = deg f``.
    epsilon : float, optional
        Requested density threshold.
    n0 : int, optional
        Least depth with ``FPP([S_d]^n0) < epsilon``.
    """

    f: Poly
    a0: Fraction
    X: int
    good_primes: int
    dividing: int
    bad_primes: tuple[int, ...]
    fpp_ladder: tuple[Fraction, ...] = ()
    epsilon: Optional[float] = None
    n0: Optional[int] = None

    @property
    def density(self) -> Fraction:
        if self.good_primes == 0:
            return Fraction(0)
        return Fraction(self.dividing, self.good_primes)


def orbit_prime_density(
    f: Poly, a0: Any, X: int, epsilon: Optional[float] = None
) -> OrbitDensityReport:
    """Share of good primes ``p <= X`` with ``v_p(f^n(a0)) > 0`` for some ``n >= 1``.

    Parameters
    ----------
    f : Poly
        Polynomial of degree ``d >= 2`` over the rationals.
    a0 : Any
        Rational starting point.
    X : int
        Prime bound, ``X >= 3``.
    epsilon : float, optional
        If given, the report also carries the least ``n0`` with
        ``FPP([S_d]^n0) < epsilon``. Defaults to ``None``.

    Returns
    -------
    OrbitDensityReport
        Counts, bad primes and the fixed-point-proportion ladder.
    """
    if f.spec != QQ:
        raise ValueError(f"Expected a polynomial over Q, got {f.spec.name}.")
    if f.degree < 2:
        raise ValueError("f must have degree at least 2.")
    if X < 3:
        raise ValueError(f"X must be at least 3, got {X}.")
    a0 = Fraction(a0)
    good = dividing = 0
    bad = []
    primes = primes_up_to(X)
    for p in track(primes, "orbit-primes", len(primes), " primes"):
        try:
            hit = orbit_hits_zero_mod_p(f, a0, p)
        except BadPrimeError:
            bad.append(p)
            continue
        good += 1
        dividing += hit
    d = f.degree
    ladder = tuple(fpp(d, m) for m in range(1, LADDER_DEPTH + 1))
    n0 = fpp_threshold(d, epsilon) if epsilon is not None else None
    report = OrbitDensityReport(f, a0, X, good, dividing, tuple(bad), ladder, epsilon, n0)
    logger.info("orbit primes of %s from %s up to %d: density %s", f, a0, X, report.density)
    return report
