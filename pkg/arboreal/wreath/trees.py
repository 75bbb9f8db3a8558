"""Automorphisms of the rooted d-ary tree of depth n, the iterated wreath power [S_d]^n."""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy

from ..caps import check_cap
from ..random import random_permutation
from .permutations import Perm

__all__ = [
    "TreeAut",
    "ShapeMismatchError",
    "wreath_order",
    "leaf_action",
    "compose",
    "inverse",
    "sample",
    "enumerate_elements",
]


class ShapeMismatchError(Exception):
    """Tree automorphisms of different arity or depth."""

    def __init__(self, message: str = "tree automorphisms differ in arity or depth.") -> None:
        super().__init__(message)


@dataclass(frozen=True, eq=True)
class TreeAut:
    """Tree automorphism as a portrait: a root permutation and ``d`` subtree automorphisms.

    Leaves are indexed by their base-``d`` digit string from the root, with the
    root-level digit most significant.

    Parameters
    ----------
    depth : int
        Depth ``n >= 1`` of the tree.
    arity : int
        Branching ``d >= 2``.
    root : Perm
        Permutation of the ``d`` top-level subtrees.
    children : tuple[TreeAut, ...]
        For ``depth > 1``, the automorphism applied inside subtree ``i`` before it
        is moved to ``root(i)``; empty at depth ``1``.
    """

    depth: int
    arity: int
    root: Perm
    children: tuple[TreeAut, ...] = ()

    def __post_init__(self) -> None:
        if self.depth < 1 or self.arity < 2:
            raise ValueError(f"Invalid tree shape d={self.arity}, n={self.depth}.")
        if self.root.degree != self.arity:
            raise ShapeMismatchError("root permutation degree must equal the arity.")
        expected = self.arity if self.depth > 1 else 0
        if len(self.children) != expected:
            raise ShapeMismatchError(f"expected {expected} children, got {len(self.children)}.")
        if any(c.depth != self.depth - 1 or c.arity != self.arity for c in self.children):
            raise ShapeMismatchError("children must have depth n - 1 and the same arity.")

    @classmethod
    def identity(cls, d: int, n: int) -> TreeAut:
        children = tuple(cls.identity(d, n - 1) for _ in range(d)) if n > 1 else ()
        return cls(n, d, Perm.identity(d), children)

    @property
    def leaves(self) -> int:
        return self.arity**self.depth

    @cached_property
    def leaf_images(self) -> tuple[int, ...]:
        if self.depth == 1:
            return self.root.images
        block = self.arity ** (self.depth - 1)
        out = []
        for top in range(self.arity):
            offset = self.root(top) * block
            out.extend(offset + j for j in self.children[top].leaf_images)
        return tuple(out)

    def __repr__(self) -> str:
        return f"TreeAut(d={self.arity}, n={self.depth}, leaves={leaf_action(self)!r})"


def wreath_order(d: int, n: int) -> int:
    """Order ``(d!)^((d^n - 1)/(d - 1))`` of ``[S_d]^n``.

    Parameters
    ----------
    d : int
        Arity, ``d >= 2``.
    n : int
        Depth, ``n >= 1``.

    Returns
    -------
    int
        Group order.
    """
    if d < 2 or n < 1:
        raise ValueError(f"Need d >= 2 and n >= 1, got d={d}, n={n}.")
    return math.factorial(d) ** ((d**n - 1) // (d - 1))


def leaf_action(a: TreeAut) -> Perm:
    """Permutation of the ``d^n`` leaves induced by a tree automorphism."""
    return Perm(a.leaf_images)


def _check_shape(a: TreeAut, b: TreeAut) -> None:
    if a.arity != b.arity or a.depth != b.depth:
        raise ShapeMismatchError()


def compose(a: TreeAut, b: TreeAut) -> TreeAut:
    """Composition ``a * b`` (apply ``b`` first), so that the leaf action is a homomorphism.

    Raises
    ------
    ShapeMismatchError
        If ``a`` and ``b`` differ in arity or depth.
    """
    _check_shape(a, b)
    root = a.root * b.root
    if a.depth == 1:
        return TreeAut(1, a.arity, root)
    children = tuple(
        compose(a.children[b.root(i)], b.children[i]) for i in range(a.arity)
    )
    return TreeAut(a.depth, a.arity, root, children)


def inverse(a: TreeAut) -> TreeAut:
    root = a.root.inverse()
    if a.depth == 1:
        return TreeAut(1, a.arity, root)
    children = tuple(inverse(a.children[root(j)]) for j in range(a.arity))
    return TreeAut(a.depth, a.arity, root, children)


def sample(d: int, n: int, rng: numpy.random.Generator) -> TreeAut:
    """Draws a uniformly random element of ``[S_d]^n``.

    The root permutation is drawn first, then the subtrees in order, recursively.

    Parameters
    ----------
    d : int
        Arity.
    n : int
        Depth.
    rng : numpy.random.Generator
        Random generator.

    Returns
    -------
    TreeAut
        Random tree automorphism.
    """
    if d < 2 or n < 1:
        raise ValueError(f"Need d >= 2 and n >= 1, got d={d}, n={n}.")
    root = Perm(random_permutation(d, rng))
    children = tuple(sample(d, n - 1, rng) for _ in range(d)) if n > 1 else ()
    return TreeAut(n, d, root, children)


def _elements(d: int, n: int, roots: Sequence[Perm]) -> Iterator[TreeAut]:
    if n == 1:
        for r in roots:
            yield TreeAut(1, d, r)
        return
    subtrees = list(_elements(d, n - 1, roots))
    for r in roots:
        for children in itertools.product(subtrees, repeat=d):
            yield TreeAut(n, d, r, children)


def enumerate_elements(d: int, n: int) -> Iterator[TreeAut]:
    """Iterates over all elements of ``[S_d]^n`` exactly once in a fixed order.

    Raises
    ------
    CapExceededError
        If the group order exceeds the ``enum_order`` cap.
    """
    check_cap("enum_order", wreath_order(d, n), f"|[S_{d}]^{n}|")
    roots = [Perm(p) for p in itertools.permutations(range(d))]
    return _elements(d, n, roots)
