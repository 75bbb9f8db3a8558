"""Exact cycle-pattern statistics of the leaf action of [S_d]^n."""

from __future__ import annotations

import logging
import math
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Optional, TypeAlias

import sympy
from sympy.utilities.iterables import partitions

from ..caps import check_cap
from ..parallel import map_chunks, merge_counters
from ..random import generator, select_seed
from .permutations import CyclePattern
from .trees import enumerate_elements, leaf_action, sample, wreath_order

__all__ = [
    "PatternDistribution",
    "pattern_distribution",
    "brute_force_distribution",
    "rho",
    "fpp",
    "fpp_threshold",
    "FppMethodLike",
    "sample_patterns",
    "wreath_pattern_support",
]

logger = logging.getLogger(__name__)

Multiset: TypeAlias = tuple[int, ...]

EXACT_BITS = 4096


@dataclass(frozen=True)
class PatternDistribution:
    """Exact distribution of cycle patterns of the leaf action of uniform ``[S_d]^n``.

    Attributes
    ----------
    d : int
        Arity.
    n : int
        Depth.
    entries : dict[CyclePattern, Fraction]
        Positive probabilities summing to ``1``, keyed by patterns of degree ``d^n``.
    group_order : int
        ``|[S_d]^n|``.
    """

    d: int
    n: int
    entries: dict[CyclePattern, Fraction]
    group_order: int

    @property
    def degree(self) -> int:
        return self.d**self.n

    @property
    def support(self) -> frozenset[CyclePattern]:
        return frozenset(self.entries)

    def __getitem__(self, pattern: CyclePattern) -> Fraction:
        return rho(self, pattern)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self) -> list[tuple[CyclePattern, Fraction]]:
        """Entries sorted by pattern."""
        return sorted(self.entries.items())

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))


def _union(a: Multiset, b: Multiset) -> Multiset:
    return tuple(sorted(a + b))


def _convolve(
    x: dict[Multiset, Fraction], y: dict[Multiset, Fraction]
) -> dict[Multiset, Fraction]:
    out: dict[Multiset, Fraction] = {}
    for a, pa in x.items():
        for b, pb in y.items():
            key = _union(a, b)
            out[key] = out.get(key, 0) + pa * pb
    return out


def _cycle_types(d: int) -> list[tuple[dict[int, int], Fraction]]:
    """Cycle types of ``S_d`` as ``{length: multiplicity}`` with their probabilities."""
    types = []
    for p in partitions(d):
        weight = 1
        for i, r in p.items():
            weight *= i**r * math.factorial(r)
        types.append((dict(p), Fraction(1, weight)))
    return types


@lru_cache(maxsize=None)
def _level(d: int, n: int) -> dict[Multiset, Fraction]:
    if n == 1:
        return {
            tuple(sorted(i for i, r in t.items() for _ in range(r))): prob
            for t, prob in _cycle_types(d)
        }
    below = _level(d, n - 1)
    # a top k-cycle lifts one element of [S_d]^(n-1), each part l becomes a kl-cycle
    powers: dict[tuple[int, int], dict[Multiset, Fraction]] = {}

    def lifted(k: int, r: int) -> dict[Multiset, Fraction]:
        if (k, r) not in powers:
            if r == 1:
                powers[k, r] = {tuple(k * l for l in lam): p for lam, p in below.items()}
            else:
                powers[k, r] = _convolve(lifted(k, r - 1), lifted(k, 1))
        return powers[k, r]

    out: dict[Multiset, Fraction] = {}
    for t, prob in _cycle_types(d):
        dist: dict[Multiset, Fraction] = {(): Fraction(1)}
        for k, r in sorted(t.items()):
            dist = _convolve(dist, lifted(k, r))
        for key, p in dist.items():
            out[key] = out.get(key, 0) + prob * p
    return out


def pattern_distribution(d: int, n: int) -> PatternDistribution:
    """Exact cycle-pattern distribution of ``[S_d]^n`` acting on its ``d^n`` leaves.

    Dynamic programming over the top decomposition ``S_d[[S_d]^(n-1)]``: for a top
    permutation of cycle type ``(k_1, k_2, ...)`` each top ``k``-cycle carries the
    product of ``k`` independent uniform elements of ``[S_d]^(n-1)``, which is again
    uniform, and every cycle of length ``l`` of that product becomes a leaf cycle
    of length ``k l``.

    Parameters
    ----------
    d : int
        Arity, ``d >= 2``.
    n : int
        Depth, ``n >= 1``.

    Returns
    -------
    PatternDistribution
        The distribution.

    Raises
    ------
    CapExceededError
        If ``d^n`` exceeds the ``dist_leaves`` cap.
    """
    order = wreath_order(d, n)
    check_cap("dist_leaves", d**n, "d^n")
    level = _level(d, n)
    entries = {CyclePattern.from_lengths(k): p for k, p in level.items()}
    logger.debug("pattern distribution d=%d n=%d has %d patterns", d, n, len(entries))
    return PatternDistribution(d, n, entries, order)


def brute_force_distribution(d: int, n: int) -> PatternDistribution:
    """Cycle-pattern distribution by enumerating every element of ``[S_d]^n``."""
    order = wreath_order(d, n)
    tally = Counter(leaf_action(a).cycle_pattern() for a in enumerate_elements(d, n))
    entries = {pattern: Fraction(c, order) for pattern, c in tally.items()}
    return PatternDistribution(d, n, entries, order)


def rho(dist: PatternDistribution, pattern: CyclePattern) -> Fraction:
    """Proportion of elements of ``[S_d]^n`` whose leaf action has the given pattern.

    Parameters
    ----------
    dist : PatternDistribution
        Distribution of ``[S_d]^n``.
    pattern : CyclePattern
        Pattern of degree ``d^n``.

    Returns
    -------
    Fraction
        ``rho(pattern)``, zero for patterns that do not occur.

    Raises
    ------
    ValueError
        If the pattern degree differs from ``d^n``.
    """
    if pattern.degree != dist.degree:
        raise ValueError(f"Pattern {pattern} has degree {pattern.degree}, expected {dist.degree}.")
    return dist.entries.get(pattern, Fraction(0))


def wreath_pattern_support(d: int, n: int) -> frozenset[CyclePattern]:
    """Patterns realized by some element of ``[S_d]^n``."""
    return pattern_distribution(d, n).support


def _fix_distribution(d: int) -> list[Fraction]:
    """``P[a uniform element of S_d fixes exactly j points]`` for ``j = 0, ..., d``."""
    total = math.factorial(d)
    return [
        Fraction(math.comb(d, j) * int(sympy.subfactorial(d - j)), total)
        for j in range(d + 1)
    ]


def _fpp_recursive(d: int, n: int) -> Fraction:
    probs = _fix_distribution(d)
    f = Fraction(1) - probs[0]
    for _ in range(n - 1):
        miss = 1 - f
        f = 1 - sum((p * miss**j for j, p in enumerate(probs)), Fraction(0))
    return f


def _fpp_from_distribution(d: int, n: int) -> Fraction:
    dist = pattern_distribution(d, n)
    return sum((p for pat, p in dist.entries.items() if pat.has_fixed_point), Fraction(0))


FppMethodLike: TypeAlias = Literal["from_distribution", "recursive"]
FPP_METHODS: dict[str, Callable[[int, int], Fraction]] = {
    "from_distribution": _fpp_from_distribution,
    "recursive": _fpp_recursive,
}


def fpp(d: int, n: int, method: FppMethodLike = "recursive") -> Fraction:
    """Fixed-point proportion of ``[S_d]^n``: the share of elements fixing some leaf.

    Parameters
    ----------
    d : int
        Arity.
    n : int
        Depth.
    method : FppMethodLike, optional
        ``"from_distribution"`` sums ``rho`` over patterns with a fixed point,
        ``"recursive"`` uses ``f_(m+1) = 1 - sum_j P[fix = j] (1 - f_m)^j``.
        Defaults to ``"recursive"``.

    Returns
    -------
    Fraction
        The fixed-point proportion.
    """
    if d < 2 or n < 1:
        raise ValueError(f"Need d >= 2 and n >= 1, got d={d}, n={n}.")
    if method not in FPP_METHODS:
        raise ValueError(f"Unknown fpp method {method}.")
    return FPP_METHODS[method](d, n)


def fpp_threshold(d: int, epsilon: float, max_depth: int = 100_000) -> int:
    """Least depth ``n`` with ``FPP([S_d]^n) < epsilon``.

    The recursion is run exactly while the denominators stay below
    ``EXACT_BITS`` bits and in floating point afterwards.

    Parameters
    ----------
    d : int
        Arity.
    epsilon : float
        Threshold in ``(0, 1]``.
    max_depth : int, optional
        Search limit. Defaults to ``100000``.

    Returns
    -------
    int
        The depth.
    """
    if not 0 < epsilon <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}.")
    probs = _fix_distribution(d)
    f: Fraction | float = 1 - probs[0]
    for n in range(1, max_depth + 1):
        if f < epsilon:
            return n
        if isinstance(f, Fraction) and f.denominator.bit_length() > EXACT_BITS:
            f, probs = float(f), [float(p) for p in probs]  # type: ignore[misc]
        miss = 1 - f
        f = 1 - sum(p * miss**j for j, p in enumerate(probs))
    raise ValueError(f"FPP stays above {epsilon} up to depth {max_depth}.")


def _sample_chunk(d: int, n: int, seed: int, stream: int, start: int, stop: int) -> Counter:
    rng = generator(seed, stream)
    return Counter(leaf_action(sample(d, n, rng)).cycle_pattern() for _ in range(start, stop))


def sample_patterns(
    d: int,
    n: int,
    samples: int,
    seed: Optional[int] = None,
    workers: int = 1,
) -> Counter[CyclePattern]:
    """Monte Carlo tally of leaf cycle patterns of uniform random elements of ``[S_d]^n``.

    Samples are split into fixed chunks, chunk ``i`` drawing from stream ``i`` of
    the seed, so the tally does not depend on ``workers``.

    Parameters
    ----------
    d : int
        Arity.
    n : int
        Depth.
    samples : int
        Number of samples.
    seed : int, optional
        Seed. Defaults to ``None`` (default seed).
    workers : int, optional
        Worker processes. Defaults to ``1``.

    Returns
    -------
    Counter[CyclePattern]
        Pattern counts.
    """
    wreath_order(d, n)
    seed = select_seed(seed)
    chunks = map_chunks(_sample_chunk, samples, (d, n, seed), workers, desc="wreath-sample")
    return merge_counters(chunks)  # type: ignore[return-value]
