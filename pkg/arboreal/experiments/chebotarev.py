"""Cycle-pattern censuses of iterates over finite fields."""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..algebra.factorization import UnsupportedFieldError, cycle_pattern_of_poly
from ..algebra.fields import FiniteField, get_field
from ..algebra.polynomials import Poly, squarefree_test
from ..caps import check_cap
from ..dynamics.genericity import is_in_H
from ..dynamics.maps import iterate
from ..parallel import map_chunks, merge_counters
from ..random import generator, select_seed
from ..wreath.distributions import pattern_distribution
from ..wreath.permutations import CyclePattern

__all__ = [
    "ForbiddenParametersError",
    "PatternComparison",
    "ScanReport",
    "FrobReport",
    "cheb_scan",
    "frob_sample",
    "field_of_order",
]

logger = logging.getLogger(__name__)


class ForbiddenParametersError(Exception):
    """The census bound is known to fail for these parameters."""


def field_of_order(q: int) -> FiniteField:
    """The finite field with ``q`` elements."""
    spec = get_field(f"q={q}")
    if not isinstance(spec, FiniteField):
        raise UnsupportedFieldError()
    return spec


@dataclass(frozen=True)
class PatternComparison:
    """Observed count of a pattern against ``q^d rho(pattern)``."""

    pattern: CyclePattern
    count: int
    rho: Fraction
    expected: Fraction
    deviation: float


@dataclass(frozen=True)
class ScanReport:
    """Census of ``A(q, b, d, n, pattern)``: polynomials of degree ``d`` with leading
    coefficient ``b`` whose ``n``-th iterate is squarefree with the given pattern.

    Attributes
    ----------
    q, b, d, n : int
        Field order, leading coefficient (raw code), degree and iterate.
    tallies : dict[CyclePattern, int]
        Pattern counts of the squarefree iterates.
    non_squarefree : int
        Number of ``f`` whose iterate has a repeated factor.
    h_members : int
        Number of ``f`` in ``H(d, n, GF(q))``.
    seed : int
        Seed of the scan.
    bound : float
        Acceptance constant ``M`` for the normalized deviation.
    """

    q: int
    b: int
    d: int
    n: int
    tallies: dict[CyclePattern, int]
    non_squarefree: int
    h_members: int
    seed: int = 0
    bound: float = 0.0

    @property
    def total(self) -> int:
        return sum(self.tallies.values()) + self.non_squarefree

    @property
    def comparison(self) -> list[PatternComparison]:
        """Rows for every supported or observed pattern, sorted by pattern."""
        dist = pattern_distribution(self.d, self.n)
        size = self.q**self.d
        scale = self.q ** (self.d - 0.5)
        patterns = sorted(set(dist.entries) | set(self.tallies))
        rows = []
        for pattern in patterns:
            count = self.tallies.get(pattern, 0)
            rho = dist.entries.get(pattern, Fraction(0))
            expected = size * rho
            rows.append(
                PatternComparison(pattern, count, rho, expected, float(abs(count - expected)) / scale)
            )
        return rows

    @property
    def max_deviation(self) -> float:
        return max((row.deviation for row in self.comparison), default=0.0)

    @property
    def violations(self) -> list[PatternComparison]:
        """Rows whose deviation exceeds the bound."""
        return [row for row in self.comparison if row.deviation > self.bound]

    @property
    def unsupported(self) -> list[CyclePattern]:
        """Observed patterns that no element of ``[S_d]^n`` has."""
        support = pattern_distribution(self.d, self.n).entries
        return sorted(p for p in self.tallies if p not in support)


def _polynomial_at(spec: FiniteField, b: int, d: int, index: int) -> Poly:
    coeffs = []
    for _ in range(d):
        index, c = divmod(index, spec.order)
        coeffs.append(c)
    return Poly(spec, coeffs + [b])


def _scan_chunk(
    q: int, b: int, d: int, n: int, stream: int, start: int, stop: int
) -> tuple[Counter, int, int]:
    spec = field_of_order(q)
    tallies: Counter = Counter()
    non_squarefree = h_members = 0
    for index in range(start, stop):
        f = _polynomial_at(spec, b, d, index)
        fn = iterate(f, n)
        if squarefree_test(fn):
            tallies[cycle_pattern_of_poly(fn)] += 1
        else:
            non_squarefree += 1
        if is_in_H(f, n).overall:
            h_members += 1
    return tallies, non_squarefree, h_members


def cheb_scan(
    q: int,
    b: int,
    d: int,
    n: int,
    seed: Optional[int] = None,
    workers: int = 1,
    bound: Optional[float] = None,
) -> ScanReport:
    """Exhaustive census over all ``q^d`` polynomials ``b x^d + ...`` of degree ``d``.

    Parameters
    ----------
    q : int
        Field order.
    b : int
        Leading coefficient, a nonzero field element code.
    d : int
        Degree, ``d >= 2``.
    n : int
        Iterate.
    seed : int, optional
        Seed. Defaults to ``None`` (default seed).
    workers : int, optional
        Worker processes. Defaults to ``1``.
    bound : float, optional
        Acceptance constant ``M``. Defaults to ``None`` (``8 d^n``).

    Returns
    -------
    ScanReport
        The census.

    Raises
    ------
    ForbiddenParametersError
        For ``d = 2`` in characteristic 2.
    CapExceededError
        If ``q^d`` exceeds ``scan_size`` or ``d^n`` exceeds ``dist_leaves``.
    """
    spec = field_of_order(q)
    if d < 2 or n < 1:
        raise ValueError(f"Need d >= 2 and n >= 1, got d={d}, n={n}.")
    if d == 2 and spec.p == 2:
        raise ForbiddenParametersError("the census bound does not hold for d = 2 in characteristic 2.")
    if not 0 < b < q:
        raise ValueError(f"leading coefficient must be a nonzero element code below {q}, got {b}.")
    check_cap("scan_size", q**d, "q^d")
    check_cap("dist_leaves", d**n, "d^n")
    seed = select_seed(seed)
    chunks = map_chunks(_scan_chunk, q**d, (q, b, d, n), workers, desc="cheb-scan")
    tallies = merge_counters(c[0] for c in chunks)
    report = ScanReport(
        q,
        int(b),
        d,
        n,
        dict(sorted(tallies.items())),
        sum(c[1] for c in chunks),
        sum(c[2] for c in chunks),
        seed,
        float(8 * d**n) if bound is None else float(bound),
    )
    logger.info(
        "cheb-scan q=%d d=%d n=%d: %d patterns, max deviation %.4f",
        q, d, n, len(report.tallies), report.max_deviation,
    )
    return report


@dataclass(frozen=True)
class FrobReport:
    """Pattern census of ``f^n - alpha`` over the values ``alpha``.

    Attributes
    ----------
    f : Poly
        The polynomial.
    n : int
        Iterate.
    exhaustive : bool
        Whether every ``alpha`` in the field was examined.
    alpha_count : int
        Number of ``alpha`` examined.
    tallies : dict[CyclePattern, int]
        Pattern counts of the squarefree ``f^n - alpha``.
    skipped : int
        Number of non-squarefree ``f^n - alpha``.
    seed : int
        Seed (sampling mode).
    """

    f: Poly
    n: int
    exhaustive: bool
    alpha_count: int
    tallies: dict[CyclePattern, int] = field(default_factory=dict)
    skipped: int = 0
    seed: int = 0

    @property
    def q(self) -> int:
        return self.f.spec.order or 0

    def expected(self, pattern: CyclePattern) -> Fraction:
        """``alpha_count * rho(pattern)``."""
        dist = pattern_distribution(self.f.degree, self.n)
        return self.alpha_count * dist.entries.get(pattern, Fraction(0))

    def max_deviation(self) -> float:
        """``max |count - alpha_count rho| / sqrt(alpha_count)`` over the support."""
        dist = pattern_distribution(self.f.degree, self.n)
        patterns = set(dist.entries) | set(self.tallies)
        return max(
            float(abs(self.tallies.get(p, 0) - self.expected(p))) / math.sqrt(self.alpha_count)
            for p in patterns
        )


def _frob_chunk(
    q: int,
    coeffs: tuple[int, ...],
    n: int,
    sampled: bool,
    seed: int,
    stream: int,
    start: int,
    stop: int,
) -> tuple[Counter, int]:
    spec = field_of_order(q)
    fn = iterate(Poly(spec, coeffs), n)
    rng = generator(seed, stream) if sampled else None
    tallies: Counter = Counter()
    skipped = 0
    for index in range(start, stop):
        alpha = spec.random_element(rng) if rng is not None else index
        g = fn - Poly.constant(spec, alpha)
        if squarefree_test(g):
            tallies[cycle_pattern_of_poly(g)] += 1
        else:
            skipped += 1
    return tallies, skipped


def frob_sample(
    f: Poly,
    n: int,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    workers: int = 1,
) -> FrobReport:
    """Cycle patterns of ``f^n - alpha`` for all or for randomly drawn ``alpha``.

    Parameters
    ----------
    f : Poly
        Polynomial of degree ``d >= 2`` over a finite field.
    n : int
        Iterate.
    samples : int, optional
        Number of random ``alpha``. Defaults to ``None`` (every field element).
    seed : int, optional
        Seed for the random ``alpha``. Defaults to ``None`` (default seed).
    workers : int, optional
        Worker processes. Defaults to ``1``.

    Returns
    -------
    FrobReport
        The census.
    """
    spec = f.spec
    if not isinstance(spec, FiniteField):
        raise UnsupportedFieldError()
    if f.degree < 2 or n < 1:
        raise ValueError("Need deg f >= 2 and n >= 1.")
    check_cap("dist_leaves", f.degree**n, "d^n")
    seed = select_seed(seed)
    sampled = samples is not None
    total = samples if samples is not None else spec.order
    check_cap("scan_size", total, "alpha count")
    chunks = map_chunks(
        _frob_chunk, total, (spec.order, f.coeffs, n, sampled, seed), workers, desc="frob"
    )
    tallies = merge_counters(c[0] for c in chunks)
    return FrobReport(
        f,
        n,
        not sampled,
        total,
        dict(sorted(tallies.items())),
        sum(c[1] for c in chunks),
        seed,
    )
