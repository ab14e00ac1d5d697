"""Permutations on {0, ..., degree-1}.

Composition convention: ``compose(p, q)`` applies ``p`` first, then ``q``,
so ``compose(p, q).images[i] == q.images[p.images[i]]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise ValueError(f"cycle entry {point} outside degree {degree}")
                if point in seen:
                    raise ValueError(f"point {point} appears in more than one cycle")
                seen.add(point)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                images[a] = b
        return cls(tuple(images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree} differ")
    qi = q.images
    return Permutation(tuple(qi[i] for i in p.images))


def element_order(g: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in g.cycles()), 1)


def commutes(x: Permutation, y: Permutation) -> bool:
    return compose(x, y) == compose(y, x)


def cyclic_subgroup(g: Permutation) -> list[Permutation]:
    """Powers g, g^2, ..., ending with the identity."""
    powers = [g]
    while not powers[-1].is_identity():
        powers.append(compose(powers[-1], g))
    return powers
