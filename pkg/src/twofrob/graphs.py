"""Cyclic graph Δ(G) and commuting graph Γ(G) of an enumerated group.

Δ(G) has vertex set G minus the identity, with x ~ y iff <x, y> is cyclic.
Two elements are adjacent exactly when both lie in a common cyclic subgroup
<z>, so the edge set is a union of cliques on <z>#, and the components come
from a union-find that joins every z with its nontrivial powers.
"""

from __future__ import annotations

import weakref
from collections import deque
from dataclasses import asdict, dataclass
from typing import Literal, Sequence

import numpy as np

from .group import CapExceeded, EnumeratedGroup, NotAMember, subgroup_closure
from .perm import Permutation

DEFAULT_PAIR_CAP = 25_000_000

GraphKind = Literal["cyclic", "commuting"]


class EmptyVertexSet(ValueError):
    pass


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        parent = self.parent
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True

    def union_many(self, x: int, ys) -> None:
        for y in ys:
            self.union(x, int(y))

    def roots(self) -> list[int]:
        return [i for i in range(len(self.parent)) if self.find(i) == i]

    def labels(self) -> np.ndarray:
        return np.array([self.find(i) for i in range(len(self.parent))], dtype=np.int64)


@dataclass(frozen=True)
class ComponentReport:
    graph_kind: GraphKind
    method: Literal["brute-force", "formula", "structured"]
    component_count: int
    component_sizes: tuple[int, ...] | None
    vertex_count: int

    def __post_init__(self) -> None:
        if self.component_sizes is not None and sum(self.component_sizes) != self.vertex_count:
            raise AssertionError("component sizes do not cover the vertex set")

    def to_dict(self) -> dict:
        out = asdict(self)
        if self.component_sizes is not None:
            out["component_sizes"] = list(self.component_sizes)
        return out


def _sizes(labels: np.ndarray) -> tuple[int, ...]:
    _, counts = np.unique(labels, return_counts=True)
    return tuple(sorted((int(c) for c in counts), reverse=True))


def _index(G: EnumeratedGroup, x: Permutation | int) -> int:
    if isinstance(x, Permutation):
        return G.index_of(x)
    x = int(x)
    if not 0 <= x < G.order:
        raise NotAMember(x)
    return x


# -- cyclic graph -----------------------------------------------------------------


def cyclic_adjacent(G: EnumeratedGroup, x: Permutation | int, y: Permutation | int) -> bool:
    i, j = _index(G, x), _index(G, y)
    if G.identity_index in (i, j):
        raise ValueError("the identity is not a vertex of the cyclic graph")
    if i == j:
        raise ValueError("adjacency is between distinct vertices")
    orders = G.element_orders
    if not G.centralizer_mask(i)[j]:
        return False
    if np.gcd(orders[i], orders[j]) == 1:
        return True
    closure = subgroup_closure(G, [i, j])
    return bool((orders[closure.indices] == closure.order).any())


_delta_cache: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def delta_labels(G: EnumeratedGroup) -> np.ndarray:
    """Component label per element index (identity gets -1)."""
    if G in _delta_cache:
        return _delta_cache[G]
    uf = UnionFind(G.order)
    ident = G.identity_index
    table = G.power_table
    for z in range(G.order):
        if z == ident:
            continue
        row = table[z]
        for w in row[1:]:
            if w < 0 or w == ident:
                break
            uf.union(z, int(w))
    labels = uf.labels()
    labels[ident] = -1
    labels.setflags(write=False)
    _delta_cache[G] = labels
    return labels


def delta_components(G: EnumeratedGroup) -> ComponentReport:
    labels = delta_labels(G)
    verts = labels[labels >= 0]
    sizes = _sizes(verts) if len(verts) else ()
    return ComponentReport("cyclic", "brute-force", len(sizes), sizes, G.order - 1)


def _cyclic_containers(G: EnumeratedGroup) -> list[list[int]]:
    """containers[x] = every z with x in <z>."""
    out: list[list[int]] = [[] for _ in range(G.order)]
    for z in range(G.order):
        for w in G.powers(z):
            out[int(w)].append(z)
    return out


def cyclic_neighbors(G: EnumeratedGroup, x: int, containers=None) -> set[int]:
    containers = containers if containers is not None else _cyclic_containers(G)
    out: set[int] = set()
    for z in containers[x]:
        out.update(int(w) for w in G.powers(z))
    out.discard(x)
    out.discard(G.identity_index)
    return out


def delta_distance(G: EnumeratedGroup, x: Permutation | int, y: Permutation | int) -> float:
    """BFS distance in Δ(G); math.inf when x and y are in different components."""
    i, j = _index(G, x), _index(G, y)
    if G.identity_index in (i, j):
        raise ValueError("the identity is not a vertex of the cyclic graph")
    if i == j:
        return 0
    labels = delta_labels(G)
    if labels[i] != labels[j]:
        return float("inf")
    containers = _cyclic_containers(G)
    dist = {i: 0}
    queue = deque([i])
    while queue:
        u = queue.popleft()
        for v in cyclic_neighbors(G, u, containers):
            if v not in dist:
                dist[v] = dist[u] + 1
                if v == j:
                    return dist[v]
                queue.append(v)
    return float("inf")


# -- commuting graph ----------------------------------------------------------------


def gamma_labels(G: EnumeratedGroup, pair_cap: int = DEFAULT_PAIR_CAP) -> np.ndarray:
    """Component label per element index (central elements get -1)."""
    central = G.center.member_flags
    noncentral = np.flatnonzero(~central)
    if len(noncentral) == 0:
        raise EmptyVertexSet("group is abelian; the commuting graph has no vertices")
    if len(noncentral) ** 2 > pair_cap:
        raise CapExceeded(pair_cap, "vertex pairs")
    uf = UnionFind(G.order)
    for x in noncentral:
        mask = G.centralizer_mask(int(x)) & ~central
        mask[: x + 1] = False
        uf.union_many(int(x), np.flatnonzero(mask))
    labels = uf.labels()
    labels[central] = -1
    return labels


def gamma_components(G: EnumeratedGroup, pair_cap: int = DEFAULT_PAIR_CAP) -> ComponentReport:
    labels = gamma_labels(G, pair_cap)
    verts = labels[labels >= 0]
    sizes = _sizes(verts)
    return ComponentReport("commuting", "brute-force", len(sizes), sizes, len(verts))


# -- DOT export -------------------------------------------------------------------------


def graph_edges(G: EnumeratedGroup, kind: GraphKind, pair_cap: int = DEFAULT_PAIR_CAP) -> tuple[list[int], list[tuple[int, int]]]:
    if kind == "cyclic":
        verts = [i for i in range(G.order) if i != G.identity_index]
        if len(verts) ** 2 > pair_cap:
            raise CapExceeded(pair_cap, "vertex pairs")
        edges: set[tuple[int, int]] = set()
        for z in verts:
            ps = sorted(int(w) for w in G.powers(z) if w != G.identity_index)
            edges.update((a, b) for k, a in enumerate(ps) for b in ps[k + 1:])
    elif kind == "commuting":
        central = G.center.member_flags
        verts = [int(i) for i in np.flatnonzero(~central)]
        if not verts:
            raise EmptyVertexSet("group is abelian; the commuting graph has no vertices")
        if len(verts) ** 2 > pair_cap:
            raise CapExceeded(pair_cap, "vertex pairs")
        edges = set()
        for x in verts:
            mask = G.centralizer_mask(x) & ~central
            mask[: x + 1] = False
            edges.update((x, int(y)) for y in np.flatnonzero(mask))
    else:
        raise ValueError(f"unknown graph kind {kind!r}")
    return verts, sorted(edges)


def export_dot(G: EnumeratedGroup, kind: GraphKind, labels: bool = False, pair_cap: int = DEFAULT_PAIR_CAP) -> str:
    verts, edges = graph_edges(G, kind, pair_cap)
    lines = [f"graph {kind} {{"]
    for v in verts:
        if labels:
            lines.append(f'  {v} [label="{G.element(v)}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {a} -- {b};" for a, b in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
