"""Exhaustively enumerated permutation groups.

Elements live in a numpy table, one row of images per element, sorted
lexicographically. Every element is pinned down by its images on a small
base of points, so products, conjugates and membership are evaluated on
the base columns only and looked up by binary search on the encoded base
images. That keeps scans like centralizers at O(|G| * |base|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .perm import DegreeMismatch, Permutation
from .primes import is_prime, is_prime_power_of, prime_factors

DEFAULT_ENUM_CAP = 200_000
# table cells (elements * degree) allowed during enumeration, ~1 GB at uint32
DEFAULT_MAX_CELLS = 250_000_000


class CapExceeded(RuntimeError):
    def __init__(self, cap: int, what: str = "elements"):
        super().__init__(f"more than {cap} {what}")
        self.cap = cap


class NotAMember(KeyError):
    pass


class NotNormal(ValueError):
    pass


def _dtype_for(degree: int) -> np.dtype:
    return np.dtype(np.uint16) if degree <= 1 << 16 else np.dtype(np.uint32)


def _as_row(p: Permutation | Sequence[int] | np.ndarray) -> np.ndarray:
    if isinstance(p, Permutation):
        return np.asarray(p.images, dtype=np.int64)
    return np.asarray(p, dtype=np.int64)


class EnumeratedGroup:
    """A fully enumerated permutation group. Treat as immutable."""

    def __init__(self, degree: int, generators: Sequence[Permutation], table: np.ndarray):
        self.degree = degree
        self.generators = list(generators)
        order = _lex_order(table)
        self.table = np.ascontiguousarray(table[order])
        self.table.setflags(write=False)
        self.base = _find_base(self.table)
        self._build_index()

    # -- construction helpers -------------------------------------------------

    def _build_index(self) -> None:
        rows = self.table[:, self.base].astype(np.int64)
        radix_ok = len(self.base) * math.log2(max(self.degree, 2)) < 62
        self._radix = radix_ok
        if radix_ok:
            weights = self.degree ** np.arange(len(self.base), dtype=np.int64)
            self._weights = weights
            keys = rows @ weights
            self._key_order = np.argsort(keys, kind="stable")
            self._sorted_keys = keys[self._key_order]
        else:
            self._key_map = {r.tobytes(): i for i, r in enumerate(rows)}

    def lookup_base(self, base_images: np.ndarray, strict: bool = True) -> np.ndarray:
        """Element indices for rows of base images; -1 (or NotAMember) if absent."""
        base_images = np.asarray(base_images, dtype=np.int64).reshape(-1, len(self.base))
        if self._radix:
            keys = base_images @ self._weights
            pos = np.searchsorted(self._sorted_keys, keys)
            pos = np.minimum(pos, len(self._sorted_keys) - 1)
            found = self._sorted_keys[pos] == keys
            out = np.where(found, self._key_order[pos], -1)
        else:
            out = np.array([self._key_map.get(r.tobytes(), -1) for r in base_images], dtype=np.int64)
        if strict and (out < 0).any():
            raise NotAMember("product left the group")
        return out

    # -- element access -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def element(self, i: int) -> Permutation:
        return Permutation(tuple(int(v) for v in self.table[i]))

    @property
    def elements(self) -> _ElementView:
        return _ElementView(self)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def index_of(self, p: Permutation | Sequence[int] | np.ndarray) -> int:
        row = _as_row(p)
        if len(row) != self.degree:
            raise DegreeMismatch(f"degree {len(row)} vs group degree {self.degree}")
        i = int(self.lookup_base(row[self.base][None], strict=False)[0])
        if i < 0 or not np.array_equal(self.table[i], row):
            raise NotAMember(str(p))
        return i

    def __contains__(self, p: Permutation) -> bool:
        try:
            self.index_of(p)
        except (NotAMember, DegreeMismatch):
            return False
        return True

    @cached_property
    def identity_index(self) -> int:
        return self.index_of(np.arange(self.degree))

    # -- index-level arithmetic ------------------------------------------------

    def mul(self, a: np.ndarray | int, b: int) -> np.ndarray:
        """Indices of compose(a_i, b) for element indices a_i."""
        a = np.atleast_1d(np.asarray(a, dtype=np.int64))
        return self.lookup_base(self.table[b][self.table[a][:, self.base]])

    def lmul(self, a: int, b: np.ndarray | int) -> np.ndarray:
        """Indices of compose(a, b_i) for element indices b_i."""
        b = np.atleast_1d(np.asarray(b, dtype=np.int64))
        cols = self.table[a][self.base]
        return self.lookup_base(self.table[np.ix_(b, cols)])

    def conj(self, a: np.ndarray | int, g: int) -> np.ndarray:
        """Indices of g^-1 a g, i.e. compose(compose(inverse(g), a), g)."""
        a = np.atleast_1d(np.asarray(a, dtype=np.int64))
        ginv_b = self.inverse_row(g)[self.base]
        return self.lookup_base(self.table[g][self.table[np.ix_(a, ginv_b)]])

    def inverse_row(self, g: int) -> np.ndarray:
        row = self.table[g]
        inv = np.empty(self.degree, dtype=np.int64)
        inv[row] = np.arange(self.degree)
        return inv

    @cached_property
    def inverse_index(self) -> np.ndarray:
        """inverse_index[i] = index of the inverse of element i."""
        # g^-1 sends g[j] to j; for base point b find j with g[j] = b
        inv_base = np.stack([(self.table == b).argmax(axis=1) for b in self.base], axis=1)
        return self.lookup_base(inv_base)

    @cached_property
    def generator_indices(self) -> list[int]:
        return [self.index_of(g) for g in self.generators]

    @cached_property
    def conjugation_maps(self) -> list[np.ndarray]:
        every = np.arange(self.order)
        return [self.conj(every, g) for g in self.generator_indices]

    # -- element statistics ---------------------------------------------------

    @cached_property
    def power_table(self) -> np.ndarray:
        """Row i lists indices of g_i, g_i^2, ..., identity, padded with -1."""
        n = self.order
        current = np.arange(n)
        cols = [current]
        alive = current != self.identity_index
        rows = np.arange(n)
        while alive.any():
            nxt = np.full(n, -1, dtype=np.int64)
            idx = rows[alive]
            # g^{k+1}[b] = g[g^k[b]]
            imgs = self.table[idx[:, None], self.table[current[idx]][:, self.base]]
            nxt[idx] = self.lookup_base(imgs)
            cols.append(nxt)
            alive = nxt >= 0
            alive &= nxt != self.identity_index
            current = np.where(nxt >= 0, nxt, current)
        table = np.stack(cols, axis=1)
        table.setflags(write=False)
        return table

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = (self.power_table >= 0).sum(axis=1)
        orders[self.identity_index] = 1
        orders.setflags(write=False)
        return orders

    def powers(self, i: int) -> np.ndarray:
        row = self.power_table[i]
        if i == self.identity_index:
            return row[:1]
        return row[row >= 0]

    # -- centralizers and classes ---------------------------------------------

    def centralizer_mask(self, x: int) -> np.ndarray:
        xr = self.table[x]
        base = self.base
        return (xr[self.table[:, base]] == self.table[:, xr[base]]).all(axis=1)

    @cached_property
    def class_labels(self) -> np.ndarray:
        n = self.order
        if not self.generator_indices:
            return np.arange(n)
        src = np.concatenate([np.arange(n)] * len(self.conjugation_maps))
        dst = np.concatenate(self.conjugation_maps)
        graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
        _, labels = connected_components(graph, directed=True, connection="weak")
        return _canonical_labels(labels)

    @cached_property
    def conjugacy_classes(self) -> list[np.ndarray]:
        return _groups_by_label(self.class_labels)

    @cached_property
    def center(self) -> SubgroupHandle:
        sizes = np.bincount(self.class_labels)
        return SubgroupHandle(self, sizes[self.class_labels] == 1)

    def is_abelian(self) -> bool:
        return len(self.conjugacy_classes) == self.order

    def trivial_subgroup(self) -> SubgroupHandle:
        flags = np.zeros(self.order, dtype=bool)
        flags[self.identity_index] = True
        return SubgroupHandle(self, flags)

    def whole(self) -> SubgroupHandle:
        return SubgroupHandle(self, np.ones(self.order, dtype=bool))

    def subgroup(self, indices: Iterable[int]) -> SubgroupHandle:
        return subgroup_closure(self, list(indices))

    def __repr__(self) -> str:
        return f"EnumeratedGroup(order={self.order}, degree={self.degree})"


class _ElementView(Sequence):
    def __init__(self, group: EnumeratedGroup):
        self._group = group

    def __len__(self) -> int:
        return self._group.order

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self._group.element(j) for j in range(*i.indices(len(self)))]
        if i < 0:
            i += len(self)
        if not 0 <= i < len(self):
            raise IndexError(i)
        return self._group.element(i)


@dataclass(eq=False)
class SubgroupHandle:
    parent: EnumeratedGroup
    member_flags: np.ndarray

    @property
    def order(self) -> int:
        return int(self.member_flags.sum())

    @cached_property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.member_flags)

    def __contains__(self, i: int) -> bool:
        return bool(self.member_flags[i])

    def elements(self) -> list[Permutation]:
        return [self.parent.element(i) for i in self.indices]

    def is_subset_of(self, other: SubgroupHandle) -> bool:
        return bool((other.member_flags | ~self.member_flags).all())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubgroupHandle):
            return NotImplemented
        return self.parent is other.parent and np.array_equal(self.member_flags, other.member_flags)

    def __repr__(self) -> str:
        return f"SubgroupHandle(order={self.order})"


def _lex_order(table: np.ndarray) -> np.ndarray:
    be = table.astype(table.dtype.newbyteorder(">"))
    keys = [r.tobytes() for r in be]
    return np.array(sorted(range(len(keys)), key=keys.__getitem__), dtype=np.int64)


def _find_base(table: np.ndarray) -> np.ndarray:
    """Greedy base: add points until base images separate all rows."""
    n, degree = table.shape
    if n == 1:
        return np.array([0], dtype=np.int64)
    labels = np.zeros(n, dtype=np.int64)
    distinct = 1
    base = []
    for point in range(degree):
        combined = labels * degree + table[:, point]
        _, new_labels = np.unique(combined, return_inverse=True)
        count = int(new_labels.max()) + 1
        if count > distinct:
            base.append(point)
            labels, distinct = new_labels.ravel(), count
            if distinct == n:
                break
    if distinct != n:
        raise ValueError("duplicate rows in element table")
    return np.array(base, dtype=np.int64)


def _canonical_labels(labels: np.ndarray) -> np.ndarray:
    """Relabel so components are numbered by their least member."""
    first = np.full(labels.max() + 1, len(labels), dtype=np.int64)
    np.minimum.at(first, labels, np.arange(len(labels)))
    rank = np.empty_like(first)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    return rank[labels]


def _groups_by_label(labels: np.ndarray) -> list[np.ndarray]:
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    return np.split(order, bounds)


def enumerate_group(
    generators: Sequence[Permutation],
    cap: int = DEFAULT_ENUM_CAP,
    degree: int | None = None,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> EnumeratedGroup:
    """Breadth-first closure of the generators under right multiplication."""
    gens = list(generators)
    degrees = {g.degree for g in gens}
    if degree is not None:
        degrees.add(degree)
    if len(degrees) > 1:
        raise DegreeMismatch(f"generators of mixed degrees {sorted(degrees)}")
    if not degrees:
        raise ValueError("degree required when there are no generators")
    (n,) = degrees
    effective_cap = min(cap, max(1, max_cells // n))
    dtype = _dtype_for(n)
    gen_rows = [np.asarray(g.images, dtype=dtype) for g in gens]

    identity = np.arange(n, dtype=dtype)
    seen = {identity.tobytes()}
    chunks = [identity[None]]
    frontier = identity[None]
    chunk_rows = max(1, 2_000_000 // n)
    while len(frontier):
        fresh = []
        for start in range(0, len(frontier), chunk_rows):
            block = frontier[start:start + chunk_rows]
            for g in gen_rows:
                for row in g[block]:
                    key = row.tobytes()
                    if key not in seen:
                        seen.add(key)
                        fresh.append(row)
                        if len(seen) > effective_cap:
                            raise CapExceeded(effective_cap)
        frontier = np.array(fresh, dtype=dtype).reshape(-1, n)
        chunks.append(frontier)
    table = np.concatenate(chunks)
    return EnumeratedGroup(n, gens, table)


def subgroup_closure(
    G: EnumeratedGroup,
    gens: Sequence[int],
    start: SubgroupHandle | None = None,
    limit: int | None = None,
) -> SubgroupHandle | None:
    """Subgroup generated by `start` and the element indices `gens`.

    Returns None as soon as the closure is known to exceed `limit` elements.
    """
    if start is None:
        flags = np.zeros(G.order, dtype=bool)
        flags[G.identity_index] = True
        old_gens: list[int] = []
    else:
        flags = start.member_flags.copy()
        old_gens = list(getattr(start, "_gens", start.indices))
    new_gens = [int(g) for g in gens if not flags[g]]
    if not new_gens:
        out = SubgroupHandle(G, flags)
        out._gens = old_gens
        return out
    all_gens = old_gens + new_gens
    # closing H ∪ {new} under right multiplication by all generators
    frontier = np.flatnonzero(flags)
    while len(frontier):
        found = []
        for g in all_gens:
            prod = G.mul(frontier, g)
            prod = prod[~flags[prod]]
            if len(prod):
                prod = np.unique(prod)
                flags[prod] = True
                found.append(prod)
        if limit is not None and flags.sum() > limit:
            return None
        frontier = np.concatenate(found) if found else np.empty(0, dtype=np.int64)
    out = SubgroupHandle(G, flags)
    out._gens = all_gens
    return out


def _generate_lean(
    G: EnumeratedGroup, candidates: Iterable[int], start: SubgroupHandle | None = None, limit: int | None = None
) -> SubgroupHandle | None:
    """Add candidates one at a time, skipping those already inside."""
    current = start if start is not None else G.trivial_subgroup()
    for c in candidates:
        if not current.member_flags[c]:
            current = subgroup_closure(G, [c], start=current, limit=limit)
            if current is None:
                return None
    return current


def is_normal(G: EnumeratedGroup, N: SubgroupHandle) -> bool:
    members = N.indices
    return all(N.member_flags[m[members]].all() for m in G.conjugation_maps)


def _check_indices(G: EnumeratedGroup, S: Iterable) -> list[int]:
    out = []
    for s in S:
        if isinstance(s, Permutation):
            out.append(G.index_of(s))
        else:
            s = int(s)
            if not 0 <= s < G.order:
                raise NotAMember(s)
            out.append(s)
    return out


def centralizer_order(G: EnumeratedGroup, x: Permutation | int) -> int:
    (i,) = _check_indices(G, [x])
    return int(G.centralizer_mask(i).sum())


def conjugacy_classes(G: EnumeratedGroup) -> list[np.ndarray]:
    return G.conjugacy_classes


def normal_closure(
    G: EnumeratedGroup, S: Iterable, start: SubgroupHandle | None = None, limit: int | None = None
) -> SubgroupHandle | None:
    """Least normal subgroup containing S (and `start`, assumed normal)."""
    idx = _check_indices(G, S)
    labels = G.class_labels
    wanted = np.isin(labels, labels[idx]) if idx else np.zeros(G.order, dtype=bool)
    return _generate_lean(G, np.flatnonzero(wanted), start=start, limit=limit)


def p_core(G: EnumeratedGroup, p: int) -> SubgroupHandle:
    """Largest normal p-subgroup, grown from class closures to a fixpoint."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    p_part = 1
    m = G.order
    while m % p == 0:
        m //= p
        p_part *= p
    core = G.trivial_subgroup()
    orders = G.element_orders
    p_classes = [
        c for c in G.conjugacy_classes if orders[c[0]] > 1 and is_prime_power_of(int(orders[c[0]]), p)
    ]
    changed = True
    while changed:
        changed = False
        for cls in p_classes:
            if core.member_flags[cls[0]]:
                continue
            grown = normal_closure(G, [int(cls[0])], start=core, limit=p_part)
            if grown is not None and is_prime_power_of(grown.order, p):
                core = grown
                changed = True
    return core


def fitting(G: EnumeratedGroup) -> SubgroupHandle:
    F = G.trivial_subgroup()
    for p in prime_factors(G.order):
        O = p_core(G, p)
        F = _generate_lean(G, O.indices, start=F)
    return F


@dataclass
class QuotientMap:
    """G acting on right cosets of N: image group plus the projection."""

    parent: EnumeratedGroup
    group: EnumeratedGroup
    projection: np.ndarray
    coset_labels: np.ndarray

    def preimage(self, sub: SubgroupHandle) -> SubgroupHandle:
        return SubgroupHandle(self.parent, sub.member_flags[self.projection])


def quotient_map(G: EnumeratedGroup, N: SubgroupHandle, check_normal: bool = True) -> QuotientMap:
    if check_normal and not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    n = G.order
    every = np.arange(n)
    n_gens = getattr(N, "_gens", None) or list(N.indices)
    if n_gens:
        src = np.concatenate([every] * len(n_gens))
        dst = np.concatenate([G.lmul(k, every) for k in n_gens])
        graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
        _, labels = connected_components(graph, directed=True, connection="weak")
        labels = _canonical_labels(labels)
    else:
        labels = every.copy()
    m = int(labels.max()) + 1
    reps = np.array([c[0] for c in _groups_by_label(labels)])
    # coset of reps[c] * x for every coset c and element x
    def action_row(x: int) -> tuple[int, ...]:
        return tuple(int(v) for v in labels[G.mul(reps, x)])

    gen_perms = [Permutation(action_row(g)) for g in G.generator_indices]
    Q = enumerate_group(gen_perms, cap=max(m, 1), degree=m)
    # x and y project to the same element exactly when they share a coset
    coset_elem = np.array([Q.index_of(action_row(int(r))) for r in reps])
    return QuotientMap(G, Q, coset_elem[labels], labels)


def coset_action(G: EnumeratedGroup, N: SubgroupHandle) -> EnumeratedGroup:
    return quotient_map(G, N).group


def subgroup_as_group(H: SubgroupHandle) -> EnumeratedGroup:
    G = H.parent
    gens = getattr(H, "_gens", None) or list(H.indices)
    return EnumeratedGroup(G.degree, [G.element(int(i)) for i in gens], G.table[H.indices])


def is_p_group(order: int, p: int) -> bool:
    return is_prime_power_of(order, p)
