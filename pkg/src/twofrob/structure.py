"""Frobenius and 2-Frobenius detection with post-hoc verification.

Candidates come from the Fitting series: K = F(G), L/K = F(G/K). Every
candidate is re-checked through the centralizer characterization before it
is returned; anything that fails comes back as None.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fields import case_label_for
from .group import (
    EnumeratedGroup,
    QuotientMap,
    SubgroupHandle,
    fitting,
    is_normal,
    quotient_map,
    subgroup_closure,
)
from .primes import is_prime


class NoCyclicComplement(AssertionError):
    pass


@dataclass
class FrobeniusDecomposition:
    K: SubgroupHandle
    complement_order: int


@dataclass
class TwoFrobeniusDecomposition:
    K: SubgroupHandle
    L: SubgroupHandle
    H_order: int
    index_G_L: int
    D_order: int
    N_order: int
    case_label: str
    p: int | None = None
    quotient: QuotientMap | None = field(default=None, repr=False)

    @property
    def K_order(self) -> int:
        return self.K.order


def is_frobenius_with_kernel(
    G: EnumeratedGroup, N: SubgroupHandle, within: SubgroupHandle | None = None
) -> bool:
    """Frobenius test for the subgroup `within` (default G) with kernel N.

    N must be normal in G; with `within` given, N must lie inside it. The
    centralizer condition only needs one x per G-class in N, since N is
    G-invariant and centralizers of conjugates are conjugate.
    """
    ambient = within.member_flags if within is not None else np.ones(G.order, dtype=bool)
    total = int(ambient.sum())
    if not 1 < N.order < total:
        return False
    if not N.is_subset_of(SubgroupHandle(G, ambient)) or not is_normal(G, N):
        return False
    labels = G.class_labels
    seen: set[int] = set()
    for x in N.indices:
        if x == G.identity_index or labels[x] in seen:
            continue
        seen.add(int(labels[x]))
        cent = G.centralizer_mask(int(x)) & ambient
        if (cent & ~N.member_flags).any():
            return False
    return True


def detect_frobenius(G: EnumeratedGroup) -> FrobeniusDecomposition | None:
    K = fitting(G)
    if not is_frobenius_with_kernel(G, K):
        return None
    return FrobeniusDecomposition(K, G.order // K.order)


def detect_two_frobenius(
    G: EnumeratedGroup, K: SubgroupHandle | None = None, L: SubgroupHandle | None = None
) -> TwoFrobeniusDecomposition | None:
    """Find and verify 1 < K < L < G; K and L may be supplied to skip the search."""
    if K is None:
        K = fitting(G)
    if not 1 < K.order < G.order or not is_normal(G, K):
        return None
    quot = quotient_map(G, K)
    Q = quot.group
    if L is None:
        L = quot.preimage(fitting(Q))
    if not K.is_subset_of(L) or not 1 < K.order < L.order < G.order or not is_normal(G, L):
        return None
    # L/K as a subgroup of the quotient
    LK_flags = np.zeros(Q.order, dtype=bool)
    LK_flags[quot.projection[L.indices]] = True
    LK = SubgroupHandle(Q, LK_flags)
    if not is_frobenius_with_kernel(G, K, within=L):
        return None
    if not is_frobenius_with_kernel(Q, LK):
        return None
    H_order = L.order // K.order
    index = G.order // L.order
    label, p = case_label_for(K.order, index)
    return TwoFrobeniusDecomposition(
        K=K,
        L=L,
        H_order=H_order,
        index_G_L=index,
        D_order=K.order * index,
        N_order=G.order // K.order,
        case_label=label,
        p=p,
        quotient=quot,
    )


def find_cyclic_complement(
    G: EnumeratedGroup, K: SubgroupHandle, L: SubgroupHandle
) -> SubgroupHandle:
    """<h> for the least-index h in L of order |L:K|."""
    target = L.order // K.order
    orders = G.element_orders
    for h in L.indices:
        if orders[h] == target:
            H = subgroup_closure(G, [int(h)])
            if not (H.member_flags & K.member_flags).sum() == 1:
                raise NoCyclicComplement("element of complement order meets K")
            return H
    raise NoCyclicComplement(f"no element of order {target} in L")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def conjugates_union(G: EnumeratedGroup, H: SubgroupHandle) -> np.ndarray:
    """Flags for the union of all conjugates of H."""
    labels = G.class_labels
    return np.isin(labels, np.unique(labels[H.indices]))


def verify_structure(
    G: EnumeratedGroup,
    dec: TwoFrobeniusDecomposition,
    delta_labels: np.ndarray | None = None,
) -> list[Check]:
    """Runtime checks of the structural properties of a verified decomposition."""
    checks = []
    H = find_cyclic_complement(G, dec.K, dec.L)
    cyclic = bool((G.element_orders[H.indices] == H.order).any())
    checks.append(Check("H cyclic of odd order", cyclic and H.order % 2 == 1, f"|H| = {H.order}"))
    checks.append(
        Check(
            "D Hall: gcd(|K||G:L|, |H|) = 1",
            math.gcd(dec.D_order, dec.H_order) == 1,
            f"|D| = {dec.D_order}, |H| = {dec.H_order}",
        )
    )
    if delta_labels is not None:
        nontrivial = H.indices[H.indices != G.identity_index]
        lab = delta_labels[nontrivial]
        one = len(np.unique(lab)) == 1 and int((delta_labels == lab[0]).sum()) == len(nontrivial)
        checks.append(Check("H# is one component of the cyclic graph", one))
    union_H = conjugates_union(G, H)
    orders = G.element_orders
    meets_kernel = True
    for cls in G.conjugacy_classes:
        x = int(cls[0])
        if union_H[x] or not is_prime(int(orders[x])):
            continue
        if (G.centralizer_mask(x) & dec.K.member_flags).sum() <= 1:
            meets_kernel = False
            break
    checks.append(Check("prime-order x outside conjugates of H has C_K(x) > 1", meets_kernel))
    checks.append(Check("Z(G) = 1", G.center.order == 1))
    return checks
