"""Generating sets for standard small permutation groups."""

from __future__ import annotations

from typing import Sequence

from .perm import Permutation


def symmetric(n: int) -> list[Permutation]:
    if n < 3:
        return [Permutation.from_cycles([(0, 1)], 2)] if n == 2 else []
    return [Permutation.from_cycles([(0, 1)], n), Permutation.from_cycles([tuple(range(n))], n)]


def alternating(n: int) -> list[Permutation]:
    return [Permutation.from_cycles([(0, 1, k)], n) for k in range(2, n)]


def cyclic(n: int) -> list[Permutation]:
    if n == 1:
        return []
    return [Permutation.from_cycles([tuple(range(n))], n)]


def dihedral(n: int) -> list[Permutation]:
    """Symmetries of the n-gon, order 2n."""
    rotation = Permutation(tuple((i + 1) % n for i in range(n)))
    reflection = Permutation(tuple((-i) % n for i in range(n)))
    return [rotation, reflection]


def quaternion() -> list[Permutation]:
    """Q8 in its regular action on 8 points."""
    i = Permutation.from_cycles([(0, 2, 1, 3), (4, 6, 5, 7)], 8)
    j = Permutation.from_cycles([(0, 4, 1, 5), (2, 7, 3, 6)], 8)
    return [i, j]


def direct_product(*factors: tuple[Sequence[Permutation], int]) -> list[Permutation]:
    """Generators of the product acting on the disjoint union of the point sets.

    Each factor is (generators, degree).
    """
    total = sum(deg for _, deg in factors)
    out = []
    offset = 0
    for gens, deg in factors:
        for g in gens:
            images = list(range(total))
            for i, j in enumerate(g.images):
                images[offset + i] = offset + j
            out.append(Permutation(tuple(images)))
        offset += deg
    return out
