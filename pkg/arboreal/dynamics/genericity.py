"""Membership test for the genericity set H(d, N, k) of degree-d polynomials."""

from __future__ import annotations

import enum
import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional

import sympy

from ..algebra.factorization import UnsupportedFieldError
from ..algebra.fields import FiniteField
from ..algebra.polynomials import (
    Poly,
    compose,
    derivative,
    divrem,
    gcd,
    hasse_derivative,
    pth_root,
    squarefree_test,
)
from ..algebra.resultants import norm_poly, resultant
from ..caps import check_cap
from .maps import (
    InseparableMapError,
    NoCriticalPointsError,
    compose_mod,
    critical_data,
)

__all__ = [
    "Collision",
    "Decomposition",
    "Verdict",
    "ConditionVerdict",
    "HReport",
    "CharacteristicError",
    "critical_value_poly",
    "critical_value_polys",
    "orbit_collision_check",
    "char2_cube_check",
    "is_indecomposable_Fq",
    "is_in_H",
]

logger = logging.getLogger(__name__)


class CharacteristicError(Exception):
    """The operation needs a field of another characteristic."""


@dataclass(frozen=True)
class Collision:
    """Critical orbit collision ``f^n(w_i) = f^m(w_j)`` with ``m <= n``.

    ``m == n`` means two distinct critical points share their ``n``-th value.
    """

    n: int
    m: int


@dataclass(frozen=True)
class Decomposition:
    """Functional decomposition ``f = g o h``, ``h`` monic with ``h(0) = 0``."""

    g: Poly
    h: Poly

    def compose(self) -> Poly:
        return compose(self.g, self.h)


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class ConditionVerdict:
    verdict: Verdict
    witness: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.FAILS

    def __str__(self) -> str:
        if self.witness:
            return f"{self.verdict.value} ({self.witness})"
        return self.verdict.value


@dataclass(frozen=True)
class HReport:
    """Verdicts of the four membership conditions.

    Attributes
    ----------
    f : Poly
        Tested polynomial.
    N : int
        Orbit length of condition (2).
    conditions : dict[int, ConditionVerdict]
        Verdicts keyed by condition number ``1`` to ``4``: separability of ``f'``
        (square of a separable polynomial in characteristic 2), no critical orbit
        collisions up to time ``N``, no point of multiplicity three over a value in
        characteristic 2, and indecomposability with ``deg f' = d - 2`` when the
        characteristic divides ``d``.
    """

    f: Poly
    N: int
    conditions: dict[int, ConditionVerdict] = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(c.ok for c in self.conditions.values())


def _critical_radical(f: Poly) -> Poly:
    crit = critical_data(f).crit_radical
    if crit.degree < 1:
        raise NoCriticalPointsError()
    return crit


def critical_value_polys(f: Poly, N: int) -> list[Poly]:
    """``[r_1, ..., r_N]`` with ``r_n(T) = prod (T - f^n(w))`` over the critical points ``w``."""
    if f.degree < 1:
        raise ValueError("f must be nonconstant.")
    c = _critical_radical(f)
    g = Poly.x(f.spec) % c
    out = []
    for _ in range(N):
        g = compose_mod(f, g, c)
        out.append(norm_poly(c, g))
    return out


def critical_value_poly(f: Poly, n: int) -> Poly:
    """Monic polynomial in ``T`` whose roots are the values ``f^n(w)`` at the critical points.

    Equals ``Res_x(c(x), T - f^n(x))`` made monic, ``c`` the critical radical. It is
    computed as the characteristic polynomial of multiplication by ``f^n mod c``.

    Parameters
    ----------
    f : Poly
        Nonconstant polynomial.
    n : int
        Iterate, ``n >= 1``.

    Returns
    -------
    Poly
        ``r_n(T)`` of degree equal to the number of distinct critical points.

    Raises
    ------
    NoCriticalPointsError
        If ``f'`` is a nonzero constant.
    InseparableMapError
        If ``f' = 0``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")
    return critical_value_polys(f, n)[-1]


def orbit_collision_check(f: Poly, N: int) -> Optional[Collision]:
    """Searches for critical orbit collisions up to time ``N``.

    Returns ``None`` if every ``r_n`` (``n <= N``) is squarefree and ``gcd(r_n, r_m) = 1``
    for all ``m < n <= N``, otherwise the least violation by ``n`` and then ``m``,
    a squarefree failure being reported as ``(n, n)``.
    """
    polys = critical_value_polys(f, N)
    for n, r in enumerate(polys, start=1):
        if not squarefree_test(r):
            return Collision(n, n)
        for m in range(1, n):
            if gcd(r, polys[m - 1]).degree > 0:
                return Collision(n, m)
    return None


def char2_cube_check(f: Poly) -> bool:
    """Whether no ``b`` is a root of multiplicity ``>= 3`` of ``f - f(b)``, in characteristic 2.

    ``b`` is such a root iff the first and second Hasse derivatives both vanish at
    ``b``, so the test is ``Res(H1, H2) != 0`` with degenerate cases for zero
    derivatives.

    Raises
    ------
    CharacteristicError
        If the field does not have characteristic 2.
    """
    if f.spec.characteristic != 2:
        raise CharacteristicError(f"{f.spec.name} does not have characteristic 2.")
    h1, h2 = hasse_derivative(f, 1), hasse_derivative(f, 2)
    if h1.is_zero:
        return False
    if h1.degree == 0:
        return True
    if h2.is_zero:
        return False
    return resultant(h1, h2).value != 0


def _base_expansion(f: Poly, h: Poly) -> Optional[Poly]:
    """``g`` with ``f = g(h)`` if all base-``h`` digits of ``f`` are constants."""
    digits = []
    while not f.is_zero:
        f, r = divrem(f, h)
        if r.degree > 0:
            return None
        digits.append(r.coeff(0))
    return Poly(h.spec, digits)


def is_indecomposable_Fq(f: Poly) -> Optional[Decomposition]:
    """Searches for a decomposition ``f = g o h`` over a finite field.

    For each proper divisor ``e`` of ``d = deg f`` every monic ``h`` of degree ``e``
    with ``h(0) = 0`` is tried in coefficient order; ``f = g o h`` iff all digits of
    the base-``h`` expansion of ``f`` are constants.

    Parameters
    ----------
    f : Poly
        Polynomial of degree ``d >= 2`` over a finite field.

    Returns
    -------
    Decomposition, optional
        The first decomposition found, ``None`` if ``f`` is indecomposable.

    Raises
    ------
    UnsupportedFieldError
        If ``f`` is not defined over a finite field.
    CapExceededError
        If ``q^(e-1)`` exceeds the ``indecomposable_budget`` cap for a divisor ``e``.
    """
    spec = f.spec
    if not isinstance(spec, FiniteField):
        raise UnsupportedFieldError()
    d = f.degree
    if d < 2:
        raise ValueError("f must have degree at least 2.")
    if sympy.isprime(d):
        return None
    divisors = [e for e in sympy.divisors(d) if 1 < e < d]
    for e in divisors:
        check_cap("indecomposable_budget", spec.order ** (e - 1), "q^(e-1)")
    for e in divisors:
        for middle in itertools.product(spec.elements(), repeat=e - 1):
            h = Poly(spec, (0,) + tuple(reversed(middle)) + (1,))
            g = _base_expansion(f, h)
            if g is not None:
                logger.debug("%s decomposes through %s", f, h)
                return Decomposition(g, h)
    return None


def _condition_separable(f: Poly) -> ConditionVerdict:
    df = derivative(f)
    if df.is_zero:
        return ConditionVerdict(Verdict.FAILS, "f' = 0")
    if f.spec.characteristic == 2:
        h = pth_root(df)
        if squarefree_test(h):
            return ConditionVerdict(Verdict.HOLDS)
        return ConditionVerdict(Verdict.FAILS, f"f' = h^2 with h = {h} not squarefree")
    if squarefree_test(df):
        return ConditionVerdict(Verdict.HOLDS)
    return ConditionVerdict(Verdict.FAILS, f"f' = {df} not squarefree")


def _condition_orbits(f: Poly, N: int) -> ConditionVerdict:
    try:
        collision = orbit_collision_check(f, N)
    except NoCriticalPointsError:
        return ConditionVerdict(Verdict.HOLDS, "no finite critical points")
    except InseparableMapError:
        return ConditionVerdict(Verdict.FAILS, "f' = 0")
    if collision is None:
        return ConditionVerdict(Verdict.HOLDS)
    if collision.n == collision.m:
        return ConditionVerdict(Verdict.FAILS, f"critical values collide at n={collision.n}")
    return ConditionVerdict(
        Verdict.FAILS, f"collision at (n, m)=({collision.n}, {collision.m})"
    )


def _condition_indecomposable(f: Poly) -> ConditionVerdict:
    d = f.degree
    dd = derivative(f).degree
    if dd != d - 2:
        return ConditionVerdict(Verdict.FAILS, f"deg f' = {dd} != d - 2 = {d - 2}")
    found = is_indecomposable_Fq(f)
    if found is not None:
        return ConditionVerdict(Verdict.FAILS, f"f = g(h) with g = {found.g}, h = {found.h}")
    return ConditionVerdict(Verdict.HOLDS)


def is_in_H(f: Poly, N: int) -> HReport:
    """Evaluates the four membership conditions of ``H(d, N, k)``.

    Parameters
    ----------
    f : Poly
        Polynomial of degree ``d >= 2``.
    N : int
        Orbit length, ``N >= 1``.

    Returns
    -------
    HReport
        Per-condition verdicts; ``overall`` is their conjunction.
    """
    if f.degree < 2:
        raise ValueError("f must have degree at least 2.")
    if N < 1:
        raise ValueError(f"N must be positive, got {N}.")
    p = f.spec.characteristic
    conditions = {1: _condition_separable(f), 2: _condition_orbits(f, N)}
    if p == 2:
        cube = char2_cube_check(f)
        conditions[3] = ConditionVerdict(
            Verdict.HOLDS if cube else Verdict.FAILS,
            None if cube else "f - c has a point of multiplicity >= 3",
        )
    else:
        conditions[3] = ConditionVerdict(Verdict.NOT_APPLICABLE)
    if p > 0 and f.degree % p == 0:
        conditions[4] = _condition_indecomposable(f)
    else:
        conditions[4] = ConditionVerdict(Verdict.NOT_APPLICABLE)
    report = HReport(f, N, conditions)
    logger.debug("H-membership of %s (N=%d): %s", f, N, report.overall)
    return report
