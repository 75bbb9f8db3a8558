"""Exact fields: the rationals and finite fields GF(p^k)."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, ClassVar, Optional, TypeAlias

import numpy
import regex
import sympy

from ..caps import check_cap
from ..utils import get_debug_mode

__all__ = [
    "FieldSpec",
    "Rationals",
    "FiniteField",
    "PrimeField",
    "ExtensionField",
    "FieldElem",
    "QQ",
    "field_make",
    "get_field",
    "FieldLike",
    "FieldMismatchError",
    "NotPrimeError",
]

Raw: TypeAlias = int | Fraction


class FieldMismatchError(Exception):
    """Operands live in different fields."""

    def __init__(self, message: str = "operands belong to different fields.") -> None:
        super().__init__(message)


class NotPrimeError(Exception):
    """The characteristic of a finite field must be prime."""


@dataclass(eq=False, repr=False, frozen=True)
class FieldSpec(ABC):
    """Field base class.

    Field elements are handled as raw values: :class:`fractions.Fraction` for the
    rationals and integers for finite fields. ``0`` and ``1`` are the raw zero and
    one of every field. :class:`FieldElem` wraps a raw value together with its field.
    """

    numeric: ClassVar[bool] = False

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, FieldSpec) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FieldSpec({self.name})"

    def __format__(self, __format_spec: str) -> str:
        return self.__repr__().__format__(__format_spec)

    @property
    @abstractmethod
    def key(self) -> tuple[int, ...]:
        """Identity of the field."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Short text tag, ``Q`` or ``q=P^K``."""

    @property
    @abstractmethod
    def characteristic(self) -> int:
        """Field characteristic (``0`` for the rationals)."""

    @property
    def order(self) -> Optional[int]:
        """Number of elements, ``None`` for infinite fields."""
        return None

    @property
    def is_finite(self) -> bool:
        """Whether the field is finite."""
        return self.order is not None

    @abstractmethod
    def coerce(self, value: Any) -> Raw:
        """Converts an integer, fraction or residue sequence into a raw value."""

    @abstractmethod
    def add(self, a: Raw, b: Raw) -> Raw: ...

    @abstractmethod
    def neg(self, a: Raw) -> Raw: ...

    @abstractmethod
    def mul(self, a: Raw, b: Raw) -> Raw: ...

    @abstractmethod
    def inv(self, a: Raw) -> Raw: ...

    def sub(self, a: Raw, b: Raw) -> Raw:
        return self.add(a, self.neg(b))

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def pow(self, a: Raw, e: int) -> Raw:
        """Raises ``a`` to the integer power ``e``."""
        if e < 0:
            return self.pow(self.inv(a), -e)
        result: Raw = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def from_int(self, n: int) -> Raw:
        """Image of the integer ``n`` in the field."""
        return self.coerce(n)

    def pth_root(self, a: Raw) -> Raw:
        """Inverse Frobenius. Identity in characteristic ``0``."""
        return a

    def reduce(self, a: Raw) -> Raw:
        """Reduces an unreduced numeric value (numeric fields only)."""
        return a

    def elements(self) -> Iterator[Raw]:
        """Iterates over all field elements in code order."""
        raise NotImplementedError(f"{self.name} is not finite.")

    @abstractmethod
    def random_element(self, rng: numpy.random.Generator) -> Raw:
        """Draws a field element."""

    @abstractmethod
    def format(self, a: Raw) -> str:
        """Text form of a raw value, as used in polynomial strings."""

    @abstractmethod
    def parse(self, token: str) -> Raw:
        """Parses a single coefficient token."""

    def element(self, value: Any) -> FieldElem:
        """Wraps a value as a :class:`FieldElem`."""
        return FieldElem(self, self.coerce(value))


@dataclass(eq=False, repr=False, frozen=True)
class Rationals(FieldSpec):
    """The field of rational numbers."""

    numeric: ClassVar[bool] = True

    @property
    def key(self) -> tuple[int, ...]:
        return (0,)

    @property
    def name(self) -> str:
        return "Q"

    @property
    def characteristic(self) -> int:
        return 0

    def coerce(self, value: Any) -> Raw:
        if isinstance(value, FieldElem):
            return value.value
        return Fraction(value)

    def add(self, a: Raw, b: Raw) -> Raw:
        return a + b

    def neg(self, a: Raw) -> Raw:
        return -a

    def sub(self, a: Raw, b: Raw) -> Raw:
        return a - b

    def mul(self, a: Raw, b: Raw) -> Raw:
        return a * b

    def inv(self, a: Raw) -> Raw:
        return 1 / Fraction(a)

    def div(self, a: Raw, b: Raw) -> Raw:
        return Fraction(a) / b

    def random_element(self, rng: numpy.random.Generator, bound: int = 9) -> Raw:
        num = int(rng.integers(-bound, bound + 1))
        den = int(rng.integers(1, bound + 1))
        return Fraction(num, den)

    def format(self, a: Raw) -> str:
        return str(Fraction(a))

    def parse(self, token: str) -> Raw:
        return Fraction(token.strip())


@dataclass(eq=False, repr=False, frozen=True)
class FiniteField(FieldSpec):
    """Finite field GF(p^k) given by a monic irreducible modulus over GF(p).

    Elements are coded as integers ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` where
    ``c_0 + c_1 y + ...`` is the residue modulo the field modulus.

    Parameters
    ----------
    p : int
        Characteristic.
    k : int
        Extension degree.
    modulus : tuple[int, ...]
        Ascending coefficients of the modulus including the leading ``1``.
    """

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def key(self) -> tuple[int, ...]:
        return (self.p, self.k)

    @property
    def name(self) -> str:
        return f"q={self.p}^{self.k}"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p**self.k

    def elements(self) -> Iterator[Raw]:
        return iter(range(self.order))

    def random_element(self, rng: numpy.random.Generator) -> Raw:
        return int(rng.integers(0, self.order))

    def residue(self, a: Raw) -> tuple[int, ...]:
        """Digits ``(c_0, ..., c_{k-1})`` of the residue coded by ``a``."""
        a = int(a)
        digits = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            digits.append(c)
        return tuple(digits)

    def encode(self, digits: Sequence[int]) -> int:
        """Codes residue digits ``(c_0, c_1, ...)`` as an integer."""
        if len(digits) > self.k:
            raise ValueError(f"Residue {tuple(digits)} has more than {self.k} digits.")
        value = 0
        for c in reversed(digits):
            value = value * self.p + int(c) % self.p
        return value

    def pth_root(self, a: Raw) -> Raw:
        return self.pow(a, self.p ** (self.k - 1))


@dataclass(eq=False, repr=False, frozen=True)
class PrimeField(FiniteField):
    """Prime field GF(p)."""

    numeric: ClassVar[bool] = True

    def coerce(self, value: Any) -> Raw:
        if isinstance(value, FieldElem):
            if value.spec != self:
                raise FieldMismatchError()
            return value.value
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, (list, tuple)):
            return self.encode(value)
        return int(value) % self.p

    def reduce(self, a: Raw) -> Raw:
        return a % self.p

    def add(self, a: Raw, b: Raw) -> Raw:
        return (a + b) % self.p

    def neg(self, a: Raw) -> Raw:
        return -a % self.p

    def sub(self, a: Raw, b: Raw) -> Raw:
        return (a - b) % self.p

    def mul(self, a: Raw, b: Raw) -> Raw:
        return a * b % self.p

    def inv(self, a: Raw) -> Raw:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero.")
        return pow(int(a), -1, self.p)

    def pow(self, a: Raw, e: int) -> Raw:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(int(a), e, self.p)

    def pth_root(self, a: Raw) -> Raw:
        return a

    def format(self, a: Raw) -> str:
        return str(a)

    def parse(self, token: str) -> Raw:
        token = token.strip()
        if token.startswith("["):
            return self.encode(_parse_residue(token))
        return self.coerce(Fraction(token))


@dataclass(eq=False, repr=False, frozen=True)
class ExtensionField(FiniteField):
    """Extension field GF(p^k), k > 1, using log/antilog and Zech tables."""

    def __repr__(self) -> str:
        if get_debug_mode():
            return f"FieldSpec({self.name}, modulus={self.modulus})"
        return super().__repr__()

    @cached_property
    def _tables(self) -> tuple[list[int], list[int], list[int]]:
        q, p = self.order, self.p
        g = self._primitive_element()
        exp = [1] * (2 * (q - 1))
        for i in range(1, 2 * (q - 1)):
            exp[i] = self._slow_mul(exp[i - 1], g)
        log = [-1] * q
        for i in range(q - 1):
            log[exp[i]] = i
        zech = [-1] * (q - 1)
        for m in range(q - 1):
            digits = list(self.residue(exp[m]))
            digits[0] = (digits[0] + 1) % p
            s = self.encode(digits)
            zech[m] = log[s] if s else -1
        return exp, log, zech

    def _slow_mul(self, a: int, b: int) -> int:
        # schoolbook residue product reduced by the monic modulus
        p, k, mod = self.p, self.k, self.modulus
        x, y = self.residue(a), self.residue(b)
        prod = [0] * (2 * k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top] % p
            if c:
                for j in range(k + 1):
                    prod[top - k + j] -= c * mod[j]
        return self.encode([c % p for c in prod[:k]])

    def _primitive_element(self) -> int:
        q = self.order
        for g in range(2, q):
            x, period = g, 1
            while x != 1:
                x = self._slow_mul(x, g)
                period += 1
                if period > q - 1:
                    break
            if period == q - 1:
                return g
        raise RuntimeError(f"No primitive element found in {self.name}.")

    def coerce(self, value: Any) -> Raw:
        if isinstance(value, FieldElem):
            if value.spec != self:
                raise FieldMismatchError()
            return value.value
        if isinstance(value, (list, tuple)):
            return self.encode(value)
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            return self.mul(num, self.inv(value.denominator % self.p))
        return int(value) % self.p

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        exp, log, zech = self._tables
        la = log[a]
        z = zech[(log[b] - la) % (self.order - 1)]
        if z < 0:
            return 0
        return exp[la + z]

    def neg(self, a: Raw) -> Raw:
        if self.p == 2 or a == 0:
            return a
        exp, log, _ = self._tables
        return exp[log[a] + (self.order - 1) // 2]

    def mul(self, a: Raw, b: Raw) -> Raw:
        if a == 0 or b == 0:
            return 0
        exp, log, _ = self._tables
        return exp[log[a] + log[b]]

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise ZeroDivisionError("inverse of zero.")
        exp, log, _ = self._tables
        return exp[(self.order - 1 - log[a]) % (self.order - 1)]

    def pow(self, a: Raw, e: int) -> Raw:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero.")
            return 0 if e else 1
        exp, log, _ = self._tables
        return exp[log[a] * e % (self.order - 1)]

    def from_int(self, n: int) -> Raw:
        return n % self.p

    def format(self, a: Raw) -> str:
        return "[" + ",".join(str(c) for c in self.residue(a)) + "]"

    def parse(self, token: str) -> Raw:
        token = token.strip()
        if token.startswith("["):
            return self.encode(_parse_residue(token))
        return int(token) % self.p


def _parse_residue(token: str) -> list[int]:
    inner = token.strip()[1:-1]
    return [int(c) for c in regex.split(r"\s*,\s*", inner.strip()) if c]


@dataclass(frozen=True, repr=False)
class FieldElem:
    """Element of a field.

    Parameters
    ----------
    spec : FieldSpec
        Field the element belongs to.
    value : Raw
        Raw value (reduced).
    """

    spec: FieldSpec
    value: Raw

    def __repr__(self) -> str:
        return f"FieldElem({self.spec.format(self.value)}, {self.spec.name})"

    def __str__(self) -> str:
        return self.spec.format(self.value)

    def _other(self, other: Any) -> Raw:
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise FieldMismatchError()
            return other.value
        return self.spec.coerce(other)

    def __add__(self, other: Any) -> FieldElem:
        return FieldElem(self.spec, self.spec.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> FieldElem:
        return FieldElem(self.spec, self.spec.sub(self.value, self._other(other)))

    def __rsub__(self, other: Any) -> FieldElem:
        return FieldElem(self.spec, self.spec.sub(self._other(other), self.value))

    def __mul__(self, other: Any) -> FieldElem:
        return FieldElem(self.spec, self.spec.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> FieldElem:
        return FieldElem(self.spec, self.spec.div(self.value, self._other(other)))

    def __neg__(self) -> FieldElem:
        return FieldElem(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int) -> FieldElem:
        return FieldElem(self.spec, self.spec.pow(self.value, e))

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> FieldElem:
        return FieldElem(self.spec, self.spec.inv(self.value))

    @property
    def residue(self) -> tuple[int, ...]:
        """Residue digits over GF(p) (finite fields only)."""
        if not isinstance(self.spec, FiniteField):
            raise TypeError("Only finite field elements have residues.")
        return self.spec.residue(self.value)


QQ = Rationals()


def field_make(p: int, k: int = 1) -> FiniteField:
    """Returns the finite field GF(p^k) with its canonical modulus.

    The modulus is the monic irreducible polynomial of degree ``k`` over GF(p)
    whose non-leading coefficients ``(c_0, ..., c_{k-1})`` are least when read
    as the base-``p`` integer ``c_0 + c_1 p + ...``. Fields are cached, so equal
    ``(p, k)`` return the identical object.

    Parameters
    ----------
    p : int
        Prime characteristic.
    k : int, optional
        Extension degree. Defaults to ``1``.

    Returns
    -------
    FiniteField
        The field.

    Raises
    ------
    NotPrimeError
        If ``p`` is not prime.
    """
    return _field_make(p, k)


@lru_cache(maxsize=None)
def _field_make(p: int, k: int) -> FiniteField:
    if not sympy.isprime(p):
        raise NotPrimeError(f"{p} is not prime.")
    if k < 1:
        raise ValueError(f"Extension degree must be positive, got {k}.")
    if k == 1:
        return PrimeField(p, 1, (0, 1))
    check_cap("extension_order", p**k, "field order")

    from .factorization import is_irreducible
    from .polynomials import Poly

    base = _field_make(p, 1)
    for code in range(p**k):
        digits = _digits(code, p, k)
        candidate = Poly(base, tuple(digits) + (1,))
        if is_irreducible(candidate):
            return ExtensionField(p, k, tuple(digits) + (1,))
    raise RuntimeError(f"No irreducible polynomial of degree {k} over GF({p}).")


def _digits(code: int, p: int, k: int) -> list[int]:
    digits = []
    for _ in range(k):
        code, c = divmod(code, p)
        digits.append(c)
    return digits


FieldLike: TypeAlias = FieldSpec | str


def get_field(field: FieldLike) -> FieldSpec:
    """Returns a field from a field spec or a tag ``Q``, ``q=P^K`` or ``q=Q``."""
    if isinstance(field, FieldSpec):
        return field
    tag = field.strip()
    if tag.upper() == "Q":
        return QQ
    match = regex.fullmatch(r"q\s*=\s*(\d+)(?:\s*\^\s*(\d+))?", tag)
    if match is None:
        raise ValueError(f"Unknown field: {field}.")
    base, exponent = int(match.group(1)), match.group(2)
    if exponent is not None:
        return field_make(base, int(exponent))
    factors = sympy.factorint(base)
    if len(factors) != 1:
        raise NotPrimeError(f"{base} is not a prime power.")
    ((p, k),) = factors.items()
    return field_make(int(p), int(k))
