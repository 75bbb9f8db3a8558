"""Dense univariate polynomials over exact fields."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from typing import Any

import regex

from ..utils import get_debug_mode
from .fields import FieldElem, FieldLike, FieldMismatchError, FieldSpec, Raw, get_field

__all__ = [
    "Poly",
    "poly",
    "parse_poly",
    "format_poly",
    "divrem",
    "gcd",
    "gcdex",
    "invmod",
    "powmod",
    "compose",
    "derivative",
    "hasse_derivative",
    "radical",
    "pth_root",
    "squarefree_test",
    "squarefree_decomposition",
    "ZeroPolynomialError",
]


class ZeroPolynomialError(Exception):
    """Operation is undefined for the zero polynomial."""

    def __init__(self, message: str = "polynomial must be nonzero.") -> None:
        super().__init__(message)


def _strip(coeffs: Sequence[Raw]) -> tuple[Raw, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense univariate polynomial with coefficients in ascending degree.

    .. note::
        Polynomials hold raw field values. For other inputs (integers,
        fractions, residue lists) use the :func:`arboreal.poly` function.

    Parameters
    ----------
    spec : FieldSpec
        Coefficient field.
    coeffs : Sequence[Raw]
        Reduced raw coefficients ``a_0, a_1, ...``; trailing zeros are dropped.
    """

    __slots__ = "spec", "coeffs"

    def __init__(self, spec: FieldSpec, coeffs: Sequence[Raw]) -> None:
        self.spec = spec
        self.coeffs = _strip(coeffs)

    # ----------------------------------------------------------------------------------
    # CONSTRUCTORS
    # ----------------------------------------------------------------------------------
    @classmethod
    def zero(cls, spec: FieldSpec) -> Poly:
        return cls(spec, ())

    @classmethod
    def one(cls, spec: FieldSpec) -> Poly:
        return cls(spec, (1,))

    @classmethod
    def x(cls, spec: FieldSpec) -> Poly:
        return cls(spec, (0, 1))

    @classmethod
    def constant(cls, spec: FieldSpec, value: Raw) -> Poly:
        return cls(spec, (value,))

    @classmethod
    def monomial(cls, spec: FieldSpec, degree: int, value: Raw = 1) -> Poly:
        return cls(spec, (0,) * degree + (value,))

    # ----------------------------------------------------------------------------------
    # PROPERTIES
    # ----------------------------------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Raw:
        """Leading coefficient (``0`` for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> Raw:
        """Raw coefficient of ``x^i``."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def elements(self) -> list[FieldElem]:
        """Coefficients as :class:`FieldElem` objects."""
        return [FieldElem(self.spec, c) for c in self.coeffs]

    def __getitem__(self, i: int) -> FieldElem:
        return FieldElem(self.spec, self.coeff(i))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # ----------------------------------------------------------------------------------
    # MAGIC METHODS
    # ----------------------------------------------------------------------------------
    def __repr__(self) -> str:
        if get_debug_mode():
            return f"Poly({self.coeffs!r}, {self.spec!r})"
        return f"Poly({format_poly(self)}, {self.spec.name})"

    def __str__(self) -> str:
        return format_poly(self)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Poly):
            return self.spec == other.spec and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElem)):
            return self.coeffs == _strip((self.spec.coerce(other),))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self.coeffs))

    def _lift(self, other: Any) -> Poly:
        if isinstance(other, Poly):
            if other.spec != self.spec:
                raise FieldMismatchError()
            return other
        return Poly(self.spec, (self.spec.coerce(other),))

    def __add__(self, other: Any) -> Poly:
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.spec.add
        return Poly(self.spec, [add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        neg = self.spec.neg
        return Poly(self.spec, [neg(c) for c in self.coeffs])

    def __sub__(self, other: Any) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other: Any) -> Poly:
        other = self._lift(other)
        return Poly(self.spec, _mul_raw(self.spec, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("Negative powers of polynomials are not defined.")
        result, base = Poly.one(self.spec), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Any) -> tuple[Poly, Poly]:
        return divrem(self, self._lift(other))

    def __floordiv__(self, other: Any) -> Poly:
        return divrem(self, self._lift(other))[0]

    def __mod__(self, other: Any) -> Poly:
        return divrem(self, self._lift(other))[1]

    def __call__(self, x: Any) -> Any:
        """Evaluates the polynomial at a field value or composes with a polynomial."""
        if isinstance(x, Poly):
            return compose(self, x)
        if isinstance(x, FieldElem):
            return FieldElem(self.spec, self.evaluate(self._lift(x).lc))
        return self.evaluate(self.spec.coerce(x))

    # ----------------------------------------------------------------------------------
    # METHODS
    # ----------------------------------------------------------------------------------
    def evaluate(self, x: Raw) -> Raw:
        """Horner evaluation at a raw value."""
        spec = self.spec
        if spec.numeric:
            acc: Raw = 0
            for c in reversed(self.coeffs):
                acc = spec.reduce(acc * x + c)
            return acc
        add, mul = spec.add, spec.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x), c)
        return acc

    def scale(self, c: Raw) -> Poly:
        """Multiplies all coefficients by the raw scalar ``c``."""
        mul = self.spec.mul
        return Poly(self.spec, [mul(c, a) for a in self.coeffs])

    def monic(self) -> Poly:
        """Returns the monic associate (the zero polynomial is returned unchanged)."""
        if self.is_zero or self.lc == 1:
            return self
        return self.scale(self.spec.inv(self.lc))

    def derivative(self) -> Poly:
        return derivative(self)

    def compose(self, g: Poly) -> Poly:
        return compose(self, g)

    def sort_key(self) -> tuple[int, int]:
        """``(degree, coefficient vector read as a base-q integer)``."""
        q = self.spec.order or 0
        code = 0
        for c in reversed(self.coeffs):
            code = code * q + int(c)
        return (self.degree, code)


def _mul_raw(spec: FieldSpec, a: Sequence[Raw], b: Sequence[Raw]) -> list[Raw]:
    if not a or not b:
        return []
    out: list[Raw] = [0] * (len(a) + len(b) - 1)
    if spec.numeric:
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        reduce = spec.reduce
        return [reduce(c) for c in out]
    add, mul = spec.add, spec.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return out


def poly(coeffs: Iterable[Any], field: FieldLike) -> Poly:
    """Creates a polynomial from arbitrary coefficient values.

    Parameters
    ----------
    coeffs : Iterable[Any]
        Ascending coefficients: integers, fractions, :class:`FieldElem` objects or
        residue digit lists (extension fields).
    field : FieldLike
        Coefficient field or field tag.

    Returns
    -------
    Poly
        Polynomial object.
    """
    spec = get_field(field)
    return Poly(spec, [spec.coerce(c) for c in coeffs])


_TOKEN = regex.compile(r"\[[^\]]*\]|[^,\s]+")


def parse_poly(text: str, field: FieldLike) -> Poly:
    """Parses the comma separated ascending coefficient format, e.g. ``"1,0,1"``.

    Coefficients are integers, fractions ``a/b`` (rationals) or bracketed residues
    ``[c0,c1,...]`` (extension fields).
    """
    spec = get_field(field)
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ValueError(f"Empty polynomial string: {text!r}.")
    return Poly(spec, [spec.parse(t) for t in tokens])


def format_poly(f: Poly) -> str:
    """Formats a polynomial in the comma separated ascending coefficient format."""
    if f.is_zero:
        return "0"
    return ",".join(f.spec.format(c) for c in f.coeffs)


def _check(f: Poly, g: Poly) -> None:
    if f.spec != g.spec:
        raise FieldMismatchError()


def divrem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Returns quotient and remainder of ``f`` divided by ``g``.

    Raises
    ------
    ZeroDivisionError
        If ``g`` is the zero polynomial.
    """
    _check(f, g)
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero.")
    spec = f.spec
    a, b = f.coeffs, g.coeffs
    db = len(b) - 1
    if len(a) - 1 < db:
        return Poly.zero(spec), f
    inv = spec.inv(b[-1])
    r = list(a)
    q: list[Raw] = [0] * (len(a) - db)
    if spec.numeric:
        reduce = spec.reduce
        for i in range(len(a) - 1 - db, -1, -1):
            c = reduce(r[i + db] * inv)
            q[i] = c
            if c:
                for j in range(db):
                    r[i + j] -= c * b[j]
        return Poly(spec, q), Poly(spec, [reduce(x) for x in r[:db]])
    add, mul, neg = spec.add, spec.mul, spec.neg
    for i in range(len(a) - 1 - db, -1, -1):
        c = mul(r[i + db], inv)
        q[i] = c
        if c:
            nc = neg(c)
            for j in range(db):
                if b[j]:
                    r[i + j] = add(r[i + j], mul(nc, b[j]))
    return Poly(spec, q), Poly(spec, r[:db])


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor, ``gcd(0, 0) = 0``."""
    _check(f, g)
    while not g.is_zero:
        f, g = g, divrem(f, g)[1]
    return f.monic()


def gcdex(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns ``(h, s, t)`` with ``s f + t g = h = gcd(f, g)``, ``h`` monic."""
    _check(f, g)
    spec = f.spec
    r0, r1 = f, g
    s0, s1 = Poly.one(spec), Poly.zero(spec)
    t0, t1 = Poly.zero(spec), Poly.one(spec)
    while not r1.is_zero:
        q, r = divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    c = spec.inv(r0.lc)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def invmod(f: Poly, m: Poly) -> Poly:
    """Inverse of ``f`` modulo ``m``.

    Raises
    ------
    ZeroDivisionError
        If ``f`` is not invertible modulo ``m``.
    """
    h, s, _ = gcdex(f % m, m)
    if h.degree != 0:
        raise ZeroDivisionError("polynomial is not invertible modulo m.")
    return s % m


def powmod(f: Poly, e: int, m: Poly) -> Poly:
    """``f^e mod m`` by square and multiply."""
    result = Poly.one(f.spec) % m
    base = f % m
    while e:
        if e & 1:
            result = (result * base) % m
        base = (base * base) % m
        e >>= 1
    return result


def compose(f: Poly, g: Poly) -> Poly:
    """Composition ``f(g(x))`` by Horner's rule."""
    _check(f, g)
    result = Poly.zero(f.spec)
    for c in reversed(f.coeffs):
        result = result * g + Poly(f.spec, (c,))
    return result


def hasse_derivative(f: Poly, j: int) -> Poly:
    """``j``-th Hasse derivative ``sum_i C(i, j) a_i x^(i-j)``.

    In any characteristic, ``b`` is a root of ``f - f(b)`` of multiplicity at least
    ``m`` iff the Hasse derivatives of order ``1 <= j < m`` all vanish at ``b``.

    Parameters
    ----------
    f : Poly
        Polynomial.
    j : int
        Order, nonnegative.

    Returns
    -------
    Poly
        The Hasse derivative.
    """
    if j < 0:
        raise ValueError(f"Order must be nonnegative, got {j}.")
    spec = f.spec
    return Poly(
        spec,
        [
            spec.mul(spec.from_int(math.comb(i, j)), a)
            for i, a in enumerate(f.coeffs)
            if i >= j
        ],
    )


def derivative(f: Poly) -> Poly:
    """Formal derivative."""
    return hasse_derivative(f, 1)


def pth_root(f: Poly) -> Poly:
    """Returns ``g`` with ``g^p = f`` for ``f`` in ``k[x^p]`` (characteristic ``p > 0``)."""
    spec = f.spec
    p = spec.characteristic
    if p == 0:
        raise ValueError("p-th roots need positive characteristic.")
    if any(c for i, c in enumerate(f.coeffs) if i % p):
        raise ValueError(f"{f} is not a p-th power.")
    return Poly(spec, [spec.pth_root(c) for c in f.coeffs[::p]])


def squarefree_test(f: Poly) -> bool:
    """Whether ``f`` has no repeated irreducible factor.

    Raises
    ------
    ZeroPolynomialError
        If ``f`` is zero.
    """
    if f.is_zero:
        raise ZeroPolynomialError()
    if f.degree <= 0:
        return True
    df = derivative(f)
    if df.is_zero:
        return False
    return gcd(f, df).degree == 0


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition of a nonzero polynomial.

    Returns pairs ``(g_i, e_i)`` of monic, squarefree, pairwise coprime, nonconstant
    polynomials with distinct multiplicities such that ``monic(f) = prod g_i^e_i``.
    """
    if f.is_zero:
        raise ZeroPolynomialError()
    f = f.monic()
    if f.degree <= 0:
        return []
    if f.spec.characteristic == 0:
        return _yun(f)
    return _sff_char_p(f)


def _yun(f: Poly) -> list[tuple[Poly, int]]:
    out = []
    df = derivative(f)
    a = gcd(f, df)
    b, c = f // a, df // a
    d = c - derivative(b)
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        b, c = b // a, d // a
        d = c - derivative(b)
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def _sff_char_p(f: Poly) -> list[tuple[Poly, int]]:
    p = f.spec.characteristic
    out: list[tuple[Poly, int]] = []
    df = derivative(f)
    if df.is_zero:
        return [(g, e * p) for g, e in _sff_char_p(pth_root(f))]
    c = gcd(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = gcd(w, c)
        fac = w // y
        if fac.degree > 0:
            out.append((fac, i))
        i += 1
        w, c = y, c // y
    if c.degree > 0:
        out.extend((g, e * p) for g, e in _sff_char_p(pth_root(c)))
    return sorted(out, key=lambda t: t[1])


def radical(f: Poly) -> Poly:
    """Monic squarefree polynomial with the same roots as ``f``.

    In characteristic ``p`` the ``p``-th power parts are handled by coefficient
    ``p``-th roots, so ``radical(x^2) = x`` over GF(2).

    Raises
    ------
    ZeroPolynomialError
        If ``f`` is zero.
    """
    result = Poly.one(f.spec)
    for g, _ in squarefree_decomposition(f):
        result = result * g
    return result

