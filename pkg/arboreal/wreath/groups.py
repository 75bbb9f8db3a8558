"""Explicit permutation groups of small order."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from ..caps import CapExceededError, get_cap
from .permutations import Perm

__all__ = ["PermGroup", "group_closure", "is_transitive", "is_primitive", "minimal_block"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PermGroup:
    """Permutation group stored with all of its elements.

    Attributes
    ----------
    degree : int
        Number of points.
    generators : tuple[Perm, ...]
        Generating set.
    elements : frozenset[Perm]
        All group elements.
    """

    degree: int
    generators: tuple[Perm, ...]
    elements: frozenset[Perm]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm: Perm) -> bool:
        return perm in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def orbit(self, point: int) -> set[int]:
        """Orbit of a point under the generators."""
        seen = {point}
        todo = [point]
        while todo:
            i = todo.pop()
            for g in self.generators:
                j = g(i)
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        return seen

    @property
    def has_transposition(self) -> bool:
        return any(g.is_transposition for g in self.elements)


def group_closure(
    gens: Sequence[Perm], cap: Optional[int] = None, degree: Optional[int] = None
) -> PermGroup:
    """Closes a set of permutations under composition by breadth-first search.

    Parameters
    ----------
    gens : Sequence[Perm]
        Generators of a common degree.
    cap : int, optional
        Maximal group order. Defaults to ``None`` (the ``closure_order`` cap).
    degree : int, optional
        Degree of the group, needed when ``gens`` is empty. Defaults to ``None``.

    Returns
    -------
    PermGroup
        The generated group.

    Raises
    ------
    CapExceededError
        If the group has more than ``cap`` elements.
    """
    if degree is None:
        degree = gens[0].degree if gens else 1
    if any(g.degree != degree for g in gens):
        raise ValueError("Generators must share one degree.")
    cap = get_cap("closure_order") if cap is None else cap
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}.")
    identity = Perm.identity(degree)
    elements = {identity}
    queue = deque([identity])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = g * a
            if b not in elements:
                elements.add(b)
                if len(elements) > cap:
                    raise CapExceededError(f"group closure exceeds cap {cap}.")
                queue.append(b)
    logger.debug("closure of %d generators on %d points has order %d", len(gens), degree, len(elements))
    return PermGroup(degree, tuple(gens), frozenset(elements))


def is_transitive(group: PermGroup) -> bool:
    """Whether the orbit of point ``0`` is every point."""
    return len(group.orbit(0)) == group.degree


def minimal_block(group: PermGroup, j: int) -> set[int]:
    """Smallest block of imprimitivity containing ``0`` and ``j``.

    Merges classes with a union-find structure until the partition generated by
    ``{0, j}`` is invariant under every generator.
    """
    parent = list(range(group.degree))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    parent[find(j)] = find(0)
    pairs = [(0, j)]
    while pairs:
        a, b = pairs.pop()
        for g in group.generators:
            ra, rb = find(g(a)), find(g(b))
            if ra != rb:
                parent[rb] = ra
                pairs.append((g(a), g(b)))
    root = find(0)
    return {i for i in range(group.degree) if find(i) == root}


def is_primitive(group: PermGroup) -> bool:
    """Whether the group is transitive and preserves no nontrivial block system.

    The trivial group on one point counts as primitive; intransitive groups are not.
    """
    if group.degree == 1:
        return True
    if not is_transitive(group):
        return False
    return all(len(minimal_block(group, j)) == group.degree for j in range(1, group.degree))
