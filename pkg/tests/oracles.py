"""Slow, independent reference computations used only by the tests.

Everything here works on plain Permutation objects and Python sets; none of
it touches the numpy element tables, base lookups or union-find.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations

from twofrob.perm import Permutation, compose, cyclic_subgroup, element_order


def naive_closure(gens: list[Permutation], degree: int) -> list[Permutation]:
    ident = Permutation.identity(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def naive_classes(elements: list[Permutation]) -> list[frozenset[Permutation]]:
    remaining = set(elements)
    out = []
    while remaining:
        x = min(remaining)
        cls = frozenset(compose(compose(g.inverse(), x), g) for g in elements)
        out.append(cls)
        remaining -= cls
    return out


def naive_centralizer(elements: list[Permutation], x: Permutation) -> list[Permutation]:
    return [g for g in elements if compose(g, x) == compose(x, g)]


def is_closed(subset: set[Permutation]) -> bool:
    return all(compose(a, b) in subset for a in subset for b in subset)


def normal_subgroups(elements: list[Permutation]) -> list[frozenset[Permutation]]:
    """Every normal subgroup, as a union of classes closed under products."""
    classes = naive_classes(elements)
    ident = Permutation.identity(elements[0].degree)
    id_cls = next(c for c in classes if ident in c)
    others = [c for c in classes if c is not id_cls]
    out = []
    for mask in range(1 << len(others)):
        s = set(id_cls)
        for i, c in enumerate(others):
            if mask >> i & 1:
                s |= c
        if len(elements) % len(s) == 0 and is_closed(s):
            out.append(frozenset(s))
    return out


def is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def generated_subgroup(gens: list[Permutation]) -> set[Permutation]:
    return set(naive_closure(gens, gens[0].degree))


def _commute(x: Permutation, y: Permutation) -> bool:
    a, b = x.images, y.images
    return all(b[a[i]] == a[b[i]] for i in range(len(a)))


def pairwise_cyclic_components(elements: list[Permutation]) -> list[int]:
    """Component sizes of the cyclic graph from explicit adjacency tests."""
    verts = [x for x in elements if not x.is_identity()]
    orders = {x: element_order(x) for x in verts}
    powers = {x: cyclic_subgroup(x) for x in verts}
    adj: dict[Permutation, list[Permutation]] = {x: [] for x in verts}
    for x, y in combinations(verts, 2):
        if not _commute(x, y):
            continue
        if math.gcd(orders[x], orders[y]) == 1:
            cyclic = True
        else:
            # x and y commute, so <x, y> = {x^i y^j}
            sub = {compose(a, b) for a in powers[x] for b in powers[y]}
            cyclic = any(element_order(z) == len(sub) for z in sub)
        if cyclic:
            adj[x].append(y)
            adj[y].append(x)
    return _component_sizes(verts, adj)


def pairwise_commuting_components(elements: list[Permutation]) -> list[int]:
    center = {z for z in elements if all(compose(z, g) == compose(g, z) for g in elements)}
    verts = [x for x in elements if x not in center]
    adj: dict[Permutation, list[Permutation]] = {x: [] for x in verts}
    for x, y in combinations(verts, 2):
        if _commute(x, y):
            adj[x].append(y)
            adj[y].append(x)
    return _component_sizes(verts, adj)


def _component_sizes(verts, adj) -> list[int]:
    seen = set()
    sizes = []
    for v in verts:
        if v in seen:
            continue
        seen.add(v)
        stack, size = [v], 0
        while stack:
            u = stack.pop()
            size += 1
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        sizes.append(size)
    return sorted(sizes, reverse=True)


def literal_m_p_star(elements: list[Permutation], p: int) -> int:
    """Order-p subgroups not centralized by any element of prime order q != p."""
    def is_prime(n):
        return n > 1 and all(n % k for k in range(2, math.isqrt(n) + 1))

    subgroups = set()
    for x in elements:
        if element_order(x) == p:
            subgroups.add(frozenset(x ** k for k in range(1, p)))
    count = 0
    for sub in subgroups:
        x = next(iter(sub))
        cent = naive_centralizer(elements, x)
        if not any(is_prime(element_order(g)) and element_order(g) != p for g in cent):
            count += 1
    return count


def multiplicative_order_mod(a: int, m: int) -> int:
    k, x = 1, a % m
    while x != 1:
        x = x * a % m
        k += 1
    return k
