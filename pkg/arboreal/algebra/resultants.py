"""Resultants, discriminants, determinants and characteristic polynomials."""

from __future__ import annotations

from collections.abc import Sequence

from .fields import FieldElem, FieldSpec, Raw
from .polynomials import Poly, ZeroPolynomialError, derivative, divrem

__all__ = [
    "resultant",
    "discriminant",
    "sylvester_matrix",
    "determinant",
    "charpoly",
    "norm_poly",
]


def resultant(f: Poly, g: Poly) -> FieldElem:
    """Resultant of two polynomials by the Euclidean recursion.

    Uses ``Res(f, g) = (-1)^(mn) lc(g)^(m - deg r) Res(g, r)`` with ``r = f mod g``
    and ``Res(f, c) = c^m`` for a constant ``c``. A zero polynomial paired with a
    nonzero constant is treated as a constant of degree ``0``.

    Parameters
    ----------
    f : Poly
        First polynomial.
    g : Poly
        Second polynomial.

    Returns
    -------
    FieldElem
        The resultant, zero iff ``f`` and ``g`` share a root in the algebraic closure
        (for nonconstant ``f`` and ``g``).

    Raises
    ------
    ZeroPolynomialError
        If both polynomials are zero.
    """
    spec = f.spec
    if f.is_zero and g.is_zero:
        raise ZeroPolynomialError("resultant of two zero polynomials.")
    if f.is_zero or g.is_zero:
        other = g if f.is_zero else f
        return FieldElem(spec, 1 if other.degree == 0 else 0)
    res: Raw = 1
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return FieldElem(spec, spec.mul(res, spec.pow(g.lc, m)))
        r = divrem(f, g)[1]
        if r.is_zero:
            return FieldElem(spec, 0)
        factor = spec.pow(g.lc, m - r.degree)
        if (m * n) % 2:
            factor = spec.neg(factor)
        res = spec.mul(res, factor)
        f, g = g, r


def discriminant(f: Poly) -> FieldElem:
    """Discriminant ``(-1)^(n(n-1)/2) Res(f, f') / lc(f)`` of a polynomial of degree ``n >= 1``."""
    n = f.degree
    if n < 1:
        raise ValueError("Discriminants need a nonconstant polynomial.")
    spec = f.spec
    res = resultant(f, derivative(f)).value
    if (n * (n - 1) // 2) % 2:
        res = spec.neg(res)
    return FieldElem(spec, spec.div(res, f.lc))


def sylvester_matrix(
    f: Sequence[Poly], g: Sequence[Poly], spec: FieldSpec
) -> list[list[Poly]]:
    """Sylvester matrix of two coefficient vectors with polynomial entries.

    Parameters
    ----------
    f : Sequence[Poly]
        Ascending coefficients of the first polynomial, leading entry nonzero.
    g : Sequence[Poly]
        Ascending coefficients of the second polynomial, leading entry nonzero.
    spec : FieldSpec
        Field of the entries.

    Returns
    -------
    list[list[Poly]]
        Square matrix of size ``deg f + deg g``.
    """
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    zero = Poly.zero(spec)
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def determinant(matrix: list[list[Poly]], spec: FieldSpec) -> Poly:
    """Determinant of a square matrix over ``k[T]`` by fraction-free Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return Poly.one(spec)
    a = [list(row) for row in matrix]
    sign = 1
    prev = Poly.one(spec)
    for k in range(n - 1):
        if a[k][k].is_zero:
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero), None)
            if swap is None:
                return Poly.zero(spec)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                q, r = divrem(num, prev)
                if not r.is_zero:
                    raise ArithmeticError("Bareiss step is not exact.")
                a[i][j] = q
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def charpoly(matrix: list[list[Raw]], spec: FieldSpec) -> Poly:
    """Characteristic polynomial ``det(T I - A)`` by reduction to Hessenberg form.

    Parameters
    ----------
    matrix : list[list[Raw]]
        Square matrix of raw field values.
    spec : FieldSpec
        Field of the entries.

    Returns
    -------
    Poly
        Monic polynomial of degree ``len(matrix)``.
    """
    n = len(matrix)
    h = [list(row) for row in matrix]
    add, mul, sub = spec.add, spec.mul, spec.sub
    for m in range(1, n - 1):
        pivot = next((i for i in range(m, n) if h[i][m - 1] != 0), None)
        if pivot is None:
            continue
        if pivot != m:
            h[pivot], h[m] = h[m], h[pivot]
            for row in h:
                row[pivot], row[m] = row[m], row[pivot]
        t = h[m][m - 1]
        for i in range(m + 1, n):
            u = spec.div(h[i][m - 1], t)
            if u == 0:
                continue
            for j in range(n):
                h[i][j] = sub(h[i][j], mul(u, h[m][j]))
            for j in range(n):
                h[j][m] = add(h[j][m], mul(u, h[j][i]))

    x = Poly.x(spec)
    polys = [Poly.one(spec)]
    for m in range(1, n + 1):
        p = (x - Poly.constant(spec, h[m - 1][m - 1])) * polys[m - 1]
        t: Raw = 1
        for i in range(m - 1, 0, -1):
            t = mul(t, h[i][i - 1])
            if t == 0:
                break
            p = p - polys[i - 1].scale(mul(h[i - 1][m - 1], t))
        polys.append(p)
    return polys[n]


def norm_poly(c: Poly, h: Poly) -> Poly:
    """``prod (T - h(w))`` over the roots ``w`` of ``c``, counted with multiplicity.

    Computed as the characteristic polynomial of multiplication by ``h`` on
    ``k[x]/(c)``; equals ``Res_x(c(x), T - h(x))`` up to the unit ``lc(c)^deg h``.

    Parameters
    ----------
    c : Poly
        Nonconstant polynomial.
    h : Poly
        Any polynomial over the same field.

    Returns
    -------
    Poly
        Monic polynomial in ``T`` of degree ``deg c``.
    """
    if c.degree < 1:
        raise ValueError("norm_poly needs a nonconstant modulus.")
    c = c.monic()
    e = c.degree
    spec = c.spec
    col = h % c
    x = Poly.x(spec)
    columns = []
    for _ in range(e):
        columns.append([col.coeff(i) for i in range(e)])
        col = (col * x) % c
    matrix = [[columns[j][i] for j in range(e)] for i in range(e)]
    return charpoly(matrix, spec)
