"""Iterates of quadratics in characteristic 2 and the affine group of F_2[Y]/(Y^n)."""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, TypeAlias

import numpy

from ..algebra.factorization import distinct_degree_factorization
from ..algebra.fields import field_make
from ..algebra.polynomials import Poly, squarefree_test
from ..caps import check_cap
from ..dynamics.maps import iterate
from ..utils import track
from ..wreath.permutations import CyclePattern, Perm

__all__ = [
    "AffineMapChar2",
    "char2_affine_fpp",
    "char2_affine_fpp_closed_form",
    "char2_affine_distribution",
    "Char2QuadReport",
    "char2_quadratic_scan",
    "Char2FppMethodLike",
]

logger = logging.getLogger(__name__)


def _clmul(a: int, b: int, n: int) -> int:
    """Product in ``F_2[Y]/(Y^n)`` of bit-coded truncated polynomials."""
    mask = (1 << n) - 1
    out = 0
    while b:
        if b & 1:
            out ^= a
        a = (a << 1) & mask
        b >>= 1
    return out & mask


def _valuation(a: int, n: int) -> int:
    """Largest ``k <= n`` with ``Y^k | a``."""
    if a == 0:
        return n
    return (a & -a).bit_length() - 1


@dataclass(frozen=True)
class AffineMapChar2:
    """Affine map ``v -> shift + unit * v`` of ``R_n = F_2[Y]/(Y^n)``.

    Elements of ``R_n`` are coded as ``n``-bit integers, bit ``i`` being the
    coefficient of ``Y^i``.

    Parameters
    ----------
    n : int
        Truncation degree.
    shift : int
        Translation part ``v'``.
    unit : int
        Linear part ``u``, a unit (odd code).
    """

    n: int
    shift: int
    unit: int

    def __post_init__(self) -> None:
        limit = 1 << self.n
        if not (0 <= self.shift < limit and 0 <= self.unit < limit):
            raise ValueError(f"Elements of R_{self.n} must be below {limit}.")
        if not self.unit & 1:
            raise ValueError("unit must have constant term 1.")

    def __call__(self, v: int) -> int:
        return self.shift ^ _clmul(self.unit, v, self.n)

    def compose(self, other: AffineMapChar2) -> AffineMapChar2:
        """``self o other``."""
        if other.n != self.n:
            raise ValueError("maps act on different rings.")
        return AffineMapChar2(
            self.n,
            self.shift ^ _clmul(self.unit, other.shift, self.n),
            _clmul(self.unit, other.unit, self.n),
        )

    def has_fixed_point(self) -> bool:
        """Direct search for ``v`` with ``shift + unit * v = v``."""
        return any(self(v) == v for v in range(1 << self.n))

    def has_fixed_point_by_divisibility(self) -> bool:
        """``1 + unit`` divides ``shift`` in ``R_n``."""
        return _valuation(self.shift, self.n) >= _valuation(1 ^ self.unit, self.n)

    def permutation(self) -> Perm:
        return Perm([self(v) for v in range(1 << self.n)])

    @classmethod
    def all(cls, n: int) -> list[AffineMapChar2]:
        return [cls(n, s, u) for u in range(1, 1 << n, 2) for s in range(1 << n)]


def _valuations(values: numpy.ndarray, n: int) -> numpy.ndarray:
    low = values & -values
    out = numpy.full(values.shape, n, dtype=numpy.int64)
    nonzero = values != 0
    out[nonzero] = numpy.log2(low[nonzero]).astype(numpy.int64)
    return out


def _fpp_divisibility(n: int) -> Fraction:
    codes = numpy.arange(1 << n, dtype=numpy.int64)
    shift_vals = _valuations(codes, n)
    # number of shifts with valuation >= k, for k = 0..n
    at_least = numpy.cumsum(numpy.bincount(shift_vals, minlength=n + 1)[::-1])[::-1]
    units = codes[1::2]
    unit_vals = _valuations(units ^ 1, n)
    count = int(at_least[unit_vals].sum())
    return Fraction(count, 1 << (2 * n - 1))


def _fpp_direct(n: int) -> Fraction:
    codes = numpy.arange(1 << n, dtype=numpy.int64)
    count = 0
    for u in range(1, 1 << n, 2):
        # shift + u v = v  iff  shift = (1 + u) v
        image = numpy.zeros_like(codes)
        a, b = codes.copy(), 1 ^ u
        mask = (1 << n) - 1
        while b:
            if b & 1:
                image ^= a
            a = (a << 1) & mask
            b >>= 1
        count += len(numpy.unique(image))
    return Fraction(count, 1 << (2 * n - 1))


Char2FppMethodLike: TypeAlias = Literal["divisibility", "direct"]
_FPP_METHODS = {"divisibility": _fpp_divisibility, "direct": _fpp_direct}


def char2_affine_fpp(n: int, method: Char2FppMethodLike = "divisibility") -> Fraction:
    """Fixed-point proportion of the affine group ``R_n x| R_n^*`` acting on ``R_n``.

    Parameters
    ----------
    n : int
        Truncation degree, ``n >= 1``.
    method : Char2FppMethodLike, optional
        ``"divisibility"`` counts maps whose shift is divisible by ``1 + u``,
        ``"direct"`` counts, for every unit ``u``, the shifts in the image of
        ``v -> (1 + u) v``. Defaults to ``"divisibility"``.

    Returns
    -------
    Fraction
        Number of maps with a fixed point divided by ``2^(2n - 1)``.

    Raises
    ------
    CapExceededError
        If ``n`` exceeds the ``char2_depth`` cap.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")
    if method not in _FPP_METHODS:
        raise ValueError(f"Unknown method {method}.")
    check_cap("char2_depth", n, "n")
    return _FPP_METHODS[method](n)


def char2_affine_fpp_closed_form(n: int) -> Fraction:
    """``1/3 + 2/(3 * 4^n)``."""
    return Fraction(1, 3) + Fraction(2, 3 * 4**n)


def char2_affine_distribution(n: int) -> dict[CyclePattern, Fraction]:
    """Exact cycle-pattern distribution of ``R_n x| R_n^*`` acting on the ``2^n`` points of ``R_n``.

    Raises
    ------
    CapExceededError
        If ``2^(3n - 1)`` (maps times points) exceeds the ``enum_order`` cap.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")
    check_cap("enum_order", 1 << (3 * n - 1), "2^(3n-1)")
    maps = AffineMapChar2.all(n)
    tally = Counter(a.permutation().cycle_pattern() for a in maps)
    return {p: Fraction(c, len(maps)) for p, c in sorted(tally.items())}


def _is_power_of_two_dividing(k: int, n: int) -> bool:
    return k & (k - 1) == 0 and k <= 1 << n


@dataclass(frozen=True)
class Char2QuadReport:
    """Factor-degree profiles of ``f^n - alpha`` for quadratics ``f`` over GF(2^k).

    Attributes
    ----------
    k : int
        Extension degree of the field.
    n : int
        Iterate.
    profiles : dict[CyclePattern, int]
        Factor-degree profiles of the squarefree ``f^n - alpha``.
    non_squarefree : int
        Number of non-squarefree ``f^n - alpha``.
    violations : tuple[str, ...]
        ``f^n - alpha`` with a factor degree that is not a power of two dividing ``2^n``.
    """

    k: int
    n: int
    profiles: dict[CyclePattern, int] = field(default_factory=dict)
    non_squarefree: int = 0
    violations: tuple[str, ...] = ()

    @property
    def examined(self) -> int:
        return sum(self.profiles.values()) + self.non_squarefree


def char2_quadratic_scan(k: int, n: int) -> Char2QuadReport:
    """Factors ``f^n - alpha`` for every ``f = a2 x^2 + a1 x + a0`` with ``a1 a2 != 0``
    and every ``alpha`` in GF(2^k).

    Parameters
    ----------
    k : int
        Extension degree, the field is GF(2^k).
    n : int
        Iterate.

    Returns
    -------
    Char2QuadReport
        Degree profiles and violations.

    Raises
    ------
    CapExceededError
        If ``k`` exceeds ``char2_quad_field`` or ``n`` exceeds ``char2_quad_depth``.
    """
    if k < 1 or n < 1:
        raise ValueError(f"Need k >= 1 and n >= 1, got k={k}, n={n}.")
    check_cap("char2_quad_field", k, "k")
    check_cap("char2_quad_depth", n, "n")
    spec = field_make(2, k)
    q = spec.order
    profiles: Counter[CyclePattern] = Counter()
    non_squarefree = 0
    violations = []
    quadratics = list(itertools.product(range(1, q), range(1, q), range(q)))
    for a2, a1, a0 in track(quadratics, "char2-quad", len(quadratics), " polys"):
        fn = iterate(Poly(spec, (a0, a1, a2)), n)
        for alpha in range(q):
            g = fn - Poly.constant(spec, alpha)
            if not squarefree_test(g):
                non_squarefree += 1
                continue
            degrees = [
                d for h, d in distinct_degree_factorization(g.monic()) for _ in range(h.degree // d)
            ]
            profiles[CyclePattern.from_lengths(degrees)] += 1
            if not all(_is_power_of_two_dividing(d, n) for d in degrees):
                violations.append(f"{g}")
    if violations:
        logger.warning("%d factor-degree violations over GF(2^%d)", len(violations), k)
    return Char2QuadReport(k, n, dict(sorted(profiles.items())), non_squarefree, tuple(violations))
