"""Testing utilities."""

import math
from collections.abc import Callable, Sequence
from typing import Optional

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from arboreal.algebra.factorization import factor
from arboreal.algebra.fields import FiniteField, PrimeField, field_make
from arboreal.algebra.polynomials import Poly, derivative, divrem, radical
from arboreal.random.random import generator, random_poly, seed
from arboreal.wreath.permutations import CyclePattern, Perm


@seed(42)
def get_random_polys(
    p: int, degree: int, count: int, k: int = 1, monic: bool = False
) -> list[Poly]:
    """Returns ``count`` random polynomials of exact degree ``degree`` over GF(p^k)."""
    spec = field_make(p, k)
    rng = generator()
    return [random_poly(spec, degree, rng, monic=monic) for _ in range(count)]


def sympy_factor_degrees(f: Poly) -> CyclePattern:
    """Returns the factor degrees (with multiplicity) of a polynomial over a prime field
    as computed by sympy."""
    assert isinstance(f.spec, PrimeField)
    dense = [int(c) for c in reversed(f.coeffs)]
    _, factors = gf_factor(dense, f.spec.p, ZZ)
    return CyclePattern.from_lengths([len(g) - 1 for g, e in factors for _ in range(e)])


def sympy_group(generators: list[Perm], degree: int) -> PermutationGroup:
    """Returns the sympy permutation group generated by the given permutations."""
    if not generators:
        return PermutationGroup([Permutation(list(range(degree)))])
    return PermutationGroup([Permutation(list(g.images)) for g in generators])


def transposition(degree: int, i: int, j: int) -> Perm:
    """Returns the transposition ``(i j)`` on ``degree`` points."""
    return Perm.from_cycles([(i, j)], degree)


def splitting_field(f: Poly) -> tuple[FiniteField, Callable[[int], int]]:
    """Returns the least extension GF(q^e) in which ``f`` splits, with the embedding
    of the coefficient field GF(q) into it."""
    small = f.spec
    assert isinstance(small, FiniteField)
    e = math.lcm(*factor(f).degrees)
    big = field_make(small.p, small.k * e)
    if small.k == 1:
        return big, lambda a: a
    beta = next(b for b in big.elements() if _evaluate(big, small.modulus, b) == 0)

    def embed(a: int) -> int:
        return _evaluate(big, small.residue(a), beta)

    return big, embed


def _evaluate(spec: FiniteField, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = spec.add(spec.mul(acc, x), c)
    return acc


def lift_roots(f: Poly, g: Poly) -> tuple[Poly, list[int]]:
    """Returns ``f`` over the splitting field of ``g`` and the distinct roots of ``g`` there,
    found by trying every element."""
    big, embed = splitting_field(g)
    lifted_g = Poly(big, [embed(c) for c in g.coeffs])
    roots = [b for b in big.elements() if lifted_g.evaluate(b) == 0]
    assert len(roots) == radical(g).degree
    return Poly(big, [embed(c) for c in f.coeffs]), roots


def orbit_collision_by_roots(f: Poly, N: int) -> Optional[tuple[int, int]]:
    """Returns the least critical orbit collision found by comparing the values
    ``f^n(w)`` at the critical points ``w`` in a splitting field."""
    lifted, points = lift_roots(f, derivative(f))
    values: list[list[int]] = []
    current = points
    for _ in range(N):
        current = [lifted.evaluate(w) for w in current]
        values.append(current)
    for n in range(1, N + 1):
        if len(set(values[n - 1])) < len(points):
            return n, n
        for m in range(1, n):
            if set(values[n - 1]) & set(values[m - 1]):
                return n, m
    return None


def max_critical_multiplicity(f: Poly) -> int:
    """Returns the largest order of vanishing of ``f - f(b)`` at a critical point ``b``,
    measured by repeated division in a splitting field."""
    lifted, points = lift_roots(f, derivative(f))
    spec = lifted.spec
    best = 0
    for b in points:
        g = lifted - Poly.constant(spec, lifted.evaluate(b))
        linear = Poly(spec, [spec.neg(b), 1])
        order = 0
        while True:
            g, r = divrem(g, linear)
            if not r.is_zero:
                break
            order += 1
        best = max(best, order)
    return best
