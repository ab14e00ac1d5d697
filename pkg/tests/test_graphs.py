import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import NILPOTENT_MIXED, P_GROUPS
from oracles import pairwise_commuting_components, pairwise_cyclic_components
from twofrob.graphs import (
    EmptyVertexSet,
    UnionFind,
    cyclic_adjacent,
    delta_components,
    delta_distance,
    delta_labels,
    export_dot,
    gamma_components,
    gamma_labels,
)
from twofrob.group import CapExceeded, NotAMember, enumerate_group
from twofrob.groups import cyclic, direct_product
from twofrob.perm import Permutation

P = Permutation.from_cycles


def test_union_find():
    uf = UnionFind(6)
    assert uf.union(0, 1) and uf.union(2, 3) and uf.union(1, 3)
    assert not uf.union(0, 2)
    assert len(uf.roots()) == 3
    assert len(set(uf.labels().tolist())) == 3


def test_cyclic_adjacent(s4):
    g = P([(0, 1, 2, 3)], 4)
    assert cyclic_adjacent(s4, g, g ** 2)
    assert not cyclic_adjacent(s4, P([(0, 1)], 4), P([(2, 3)], 4))
    G = enumerate_group(cyclic(6))
    gen = G.element(G.generator_indices[0])
    assert cyclic_adjacent(G, gen ** 3, gen ** 2)
    with pytest.raises(ValueError):
        cyclic_adjacent(s4, Permutation.identity(4), g)
    with pytest.raises(NotAMember):
        cyclic_adjacent(s4, 99, 1)


def test_delta_components_s4(s4):
    rep = delta_components(s4)
    assert rep.component_count == 13
    assert rep.vertex_count == 23
    assert sorted(rep.component_sizes, reverse=True) == sorted(pairwise_cyclic_components(list(s4.elements)), reverse=True)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_delta_prime_cyclic(p):
    assert delta_components(enumerate_group(cyclic(p))).component_count == 1


def test_gamma_components(s4, q8):
    rep = gamma_components(s4)
    assert rep.component_count == 5
    assert rep.component_sizes == (15, 2, 2, 2, 2)
    assert gamma_components(q8).component_count == 3
    with pytest.raises(EmptyVertexSet):
        gamma_components(enumerate_group(cyclic(5)))
    with pytest.raises(CapExceeded):
        gamma_components(s4, pair_cap=10)


def test_delta_distance(s4):
    g = P([(0, 1, 2, 3)], 4)
    assert delta_distance(s4, g, g) == 0
    assert delta_distance(s4, g, g ** 2) == 1
    assert delta_distance(s4, P([(0, 1, 2)], 4), P([(0, 3)], 4)) == math.inf
    # two 4-cycles sharing a square are at distance 2
    assert delta_distance(s4, g, g ** 3) == 1
    assert delta_distance(s4, g, P([(0, 3, 2, 1)], 4)) == 1
    assert delta_distance(s4, g, P([(0, 2), (1, 3)], 4)) == 1
    assert delta_distance(s4, g, P([(0, 1)], 4)) == math.inf


def _dot_counts(text):
    lines = [l.strip() for l in text.splitlines()[1:-1]]
    edges = [l for l in lines if "--" in l]
    return len(lines) - len(edges), edges


def test_export_dot_z4():
    G = enumerate_group(cyclic(4))
    n_vertices, edges = _dot_counts(export_dot(G, "cyclic"))
    assert (n_vertices, len(edges)) == (3, 3)


def test_export_dot_s3(s3):
    text = export_dot(s3, "cyclic", labels=True)
    n_vertices, edges = _dot_counts(text)
    assert n_vertices == 5 and len(edges) == 1
    a, b = (int(x) for x in edges[0].rstrip(";").split(" -- "))
    assert s3.element_orders[a] == s3.element_orders[b] == 3
    assert text == export_dot(s3, "cyclic", labels=True)
    assert text.startswith("graph cyclic {")
    assert 'label="(0 1 2)"' in text


def test_export_dot_commuting(q8):
    n_vertices, edges = _dot_counts(export_dot(q8, "commuting"))
    assert (n_vertices, len(edges)) == (6, 3)


CORPUS = {
    "S3": None, "S4": None, "A4": None, "Q8": None,
    **{k: v[0] for k, v in P_GROUPS.items()},
    **NILPOTENT_MIXED,
}


@pytest.mark.parametrize("name", sorted(k for k in CORPUS if CORPUS[k] is not None))
def test_delta_union_find_matches_pairwise(name):
    G = enumerate_group(CORPUS[name])
    assert list(delta_components(G).component_sizes) == pairwise_cyclic_components(list(G.elements))


def test_delta_spanning_subgraph_of_gamma(s4, a4, q8, frob30):
    for G in (s4, a4, q8, frob30):
        # every Δ edge is a commuting pair
        for z in range(G.order):
            pw = G.powers(z)
            for w in pw:
                assert G.centralizer_mask(int(w))[pw].all()
        if G.center.order == 1:
            d, g = delta_labels(G), gamma_labels(G)
            # each Δ component inside one Γ component
            for lab in np.unique(d[d >= 0]):
                assert len(np.unique(g[d == lab])) == 1
            assert gamma_components(G).component_count <= delta_components(G).component_count


@st.composite
def small_groups(draw):
    n = draw(st.integers(2, 6))
    gens = [Permutation(tuple(draw(st.permutations(range(n))))) for _ in range(draw(st.integers(1, 2)))]
    return enumerate_group(gens)


@settings(max_examples=40, deadline=None)
@given(small_groups())
def test_random_groups_match_oracles(G):
    elems = list(G.elements)
    if G.order > 1:
        assert list(delta_components(G).component_sizes) == pairwise_cyclic_components(elems)
    if not G.is_abelian():
        assert list(gamma_components(G).component_sizes) == pairwise_commuting_components(elems)
    else:
        with pytest.raises(EmptyVertexSet):
            gamma_components(G)


def test_nilpotent_mixed_connected():
    for gens in NILPOTENT_MIXED.values():
        assert delta_components(enumerate_group(gens)).component_count == 1
    G = enumerate_group(direct_product((cyclic(2), 2), (cyclic(3), 3)))
    assert delta_components(G).component_count == 1
