"""Parametric discriminants of phi(x) - T and of iterates."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..algebra.polynomials import (
    Poly,
    derivative,
    gcd,
    invmod,
    radical,
    squarefree_decomposition,
)
from ..algebra.resultants import determinant, norm_poly, sylvester_matrix
from .genericity import critical_value_polys
from .maps import (
    InseparableMapError,
    RationalMap,
    critical_data,
    iterate,
)

__all__ = ["DiscParam", "IterateDiscriminant", "disc_param", "disc_iterate_radical"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiscParam:
    """Discriminant of ``phi(x) - T`` in two forms.

    Attributes
    ----------
    delta : Poly
        Monic ``Res_x(p' q - p q', p(x) - T q(x))`` as a polynomial in ``T``.
    critical_product : tuple[tuple[Poly, int], ...]
        Factorization ``prod (T - phi(a))^e`` over the distinct finite critical values,
        grouped by exponent: the exponent of a value is the sum of ``ord_a(phi')``
        over the critical points ``a`` above it.
    """

    delta: Poly
    critical_product: tuple[tuple[Poly, int], ...]

    def expand_product(self) -> Poly:
        result = Poly.one(self.delta.spec)
        for g, e in self.critical_product:
            result = result * g**e
        return result


@dataclass(frozen=True)
class IterateDiscriminant:
    """Radical of the discriminant of ``f^n(x) - T`` and the critical orbit it should match.

    Attributes
    ----------
    radical : Poly
        Radical of ``Delta(f^n(x) - T)``.
    critical_orbit : Poly
        Radical of ``r_1(T) ... r_n(T)``, whose roots are the values ``f^m(b)``,
        ``m <= n``, at the critical points ``b``.
    """

    radical: Poly
    critical_orbit: Poly

    @property
    def matches_critical_orbit(self) -> bool:
        return self.radical == self.critical_orbit


def _resultant_form(crit: Poly, phi: RationalMap) -> Poly:
    spec = crit.spec
    p, q = phi.num, phi.den
    d = phi.degree
    fiber = [Poly(spec, (p.coeff(i), spec.neg(q.coeff(i)))) for i in range(d + 1)]
    constants = [Poly.constant(spec, c) for c in crit.coeffs]
    det = determinant(sylvester_matrix(constants, fiber, spec), spec)
    return det.monic()


def _strip_poles(crit: Poly, q: Poly) -> Poly:
    g = gcd(crit, q)
    while g.degree > 0:
        crit = crit // g
        g = gcd(crit, q)
    return crit


def disc_param(phi: RationalMap | Poly) -> DiscParam:
    """Parametric discriminant ``Delta(T) = Res_x(p' q - p q', p(x) - T q(x))``.

    The resultant is the determinant of a Sylvester matrix over ``k[T]``. The
    critical-value product is computed independently from the squarefree parts of
    the critical polynomial; both have the same radical.

    Parameters
    ----------
    phi : RationalMap | Poly
        Nonconstant map.

    Returns
    -------
    DiscParam
        Both forms, each normalized monic.

    Raises
    ------
    InseparableMapError
        If ``p' = q' = 0``, i.e. the fiber ``p - T q`` is inseparable.
    """
    if isinstance(phi, Poly):
        phi = RationalMap.from_poly(phi)
    p, q = phi.num, phi.den
    if derivative(p).is_zero and derivative(q).is_zero:
        raise InseparableMapError("p - Tq is inseparable in x.")
    crit = critical_data(phi).crit_poly
    delta = _resultant_form(crit, phi)

    affine = _strip_poles(crit, q)
    product = Poly.one(p.spec)
    if affine.degree > 0:
        for c_j, j in squarefree_decomposition(affine):
            values = p * invmod(q % c_j, c_j) if q.degree > 0 else p
            product = product * norm_poly(c_j, values) ** j
    critical_product = tuple(squarefree_decomposition(product)) if product.degree > 0 else ()
    logger.debug("disc_param of %s: deg Delta = %d", phi, delta.degree)
    return DiscParam(delta, critical_product)


def disc_iterate_radical(f: Poly, n: int) -> IterateDiscriminant:
    """Radical of ``Delta(f^n(x) - T)`` together with the radical of ``r_1 ... r_n``.

    Parameters
    ----------
    f : Poly
        Nonconstant polynomial.
    n : int
        Iterate, ``n >= 1``.

    Returns
    -------
    IterateDiscriminant
        Both radicals; they agree since the only critical values of ``f^n`` are
        ``f^m(b)`` for critical points ``b`` of ``f`` and ``m <= n``.
    """
    fn = iterate(f, n)
    delta = disc_param(fn).delta
    rad = radical(delta) if delta.degree > 0 else Poly.one(f.spec)
    orbit = Poly.one(f.spec)
    if critical_data(f).has_critical_points:
        for r in critical_value_polys(f, n):
            orbit = orbit * r
        orbit = radical(orbit)
    return IterateDiscriminant(rad, orbit)
