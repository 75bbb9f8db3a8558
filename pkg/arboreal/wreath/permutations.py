"""Permutations and cycle patterns."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

import regex

__all__ = ["Perm", "CyclePattern"]


@dataclass(frozen=True, order=True)
class CyclePattern:
    """Multiset of cycle lengths ``(1)^r_1 (2)^r_2 ... (m)^r_m``.

    Parameters
    ----------
    degree : int
        Number of permuted points ``m = sum i r_i``.
    parts : tuple[tuple[int, int], ...]
        Pairs ``(i, r_i)`` with strictly increasing lengths and ``r_i >= 1``.
    """

    degree: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        lengths = [i for i, _ in self.parts]
        if any(r < 1 for _, r in self.parts) or lengths != sorted(set(lengths)):
            raise ValueError(f"Invalid cycle pattern parts {self.parts}.")
        if sum(i * r for i, r in self.parts) != self.degree:
            raise ValueError(f"Parts {self.parts} do not sum to degree {self.degree}.")

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> CyclePattern:
        """Builds a pattern from a list of cycle lengths (any order)."""
        counts = Counter(lengths)
        return cls(sum(i * r for i, r in counts.items()), tuple(sorted(counts.items())))

    @classmethod
    def parse(cls, text: str) -> CyclePattern:
        """Parses the text form, e.g. ``"1^3 2^1 4^2"``."""
        pairs = []
        for token in regex.split(r"\s+", text.strip()):
            match = regex.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if match is None:
                raise ValueError(f"Invalid cycle pattern token {token!r}.")
            pairs.append((int(match.group(1)), int(match.group(2) or 1)))
        lengths = [i for i, r in pairs for _ in range(r)]
        return cls.from_lengths(lengths)

    def __str__(self) -> str:
        return " ".join(f"{i}^{r}" for i, r in self.parts)

    def __repr__(self) -> str:
        return f"CyclePattern({self})"

    def multiplicity(self, length: int) -> int:
        """Number ``r_i`` of cycles of the given length."""
        return dict(self.parts).get(length, 0)

    @property
    def fixed_points(self) -> int:
        return self.multiplicity(1)

    @property
    def has_fixed_point(self) -> bool:
        return self.fixed_points > 0

    @property
    def lengths(self) -> list[int]:
        """Cycle lengths in ascending order, repeated by multiplicity."""
        return [i for i, r in self.parts for _ in range(r)]


class Perm:
    """Permutation of ``{0, ..., m - 1}`` in one-line notation.

    Parameters
    ----------
    images : Sequence[int]
        ``images[i]`` is the image of ``i``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]) -> None:
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation.")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Perm:
        """Builds a permutation from disjoint cycles, e.g. ``[(0, 1), (2, 3)]``."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Perm) -> Perm:
        """``(self * other)(i) = self(other(i))``."""
        if other.degree != self.degree:
            raise ValueError("Permutations of different degree.")
        a = self.images
        return Perm._trusted(tuple(a[j] for j in other.images))

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: Perm) -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        cycles = [c for c in self.cycles() if len(c) > 1]
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) or "()"
        return f"Perm({body}, degree={self.degree})"

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Perm:
        perm = object.__new__(cls)
        perm.images = images
        return perm

    def inverse(self) -> Perm:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._trusted(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.images[i]
            out.append(tuple(cycle))
        return out

    def cycle_pattern(self) -> CyclePattern:
        return CyclePattern.from_lengths(len(c) for c in self.cycles())

    @property
    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    @property
    def is_transposition(self) -> bool:
        return sum(1 for i, j in enumerate(self.images) if i != j) == 2
