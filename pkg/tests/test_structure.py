import pytest

from conftest import P_GROUPS
from twofrob.group import enumerate_group, fitting, subgroup_closure
from twofrob.groups import cyclic
from twofrob.structure import (
    detect_frobenius,
    detect_two_frobenius,
    find_cyclic_complement,
    is_frobenius_with_kernel,
    verify_structure,
)


def test_is_frobenius_with_kernel(a4, s4):
    assert is_frobenius_with_kernel(a4, fitting(a4))
    assert not is_frobenius_with_kernel(s4, fitting(s4))
    assert not is_frobenius_with_kernel(s4, s4.whole())
    assert not is_frobenius_with_kernel(s4, s4.trivial_subgroup())


def test_detect_frobenius(a4, s3, s4, frob30):
    dec = detect_frobenius(a4)
    assert (dec.K.order, dec.complement_order) == (4, 3)
    dec = detect_frobenius(s3)
    assert (dec.K.order, dec.complement_order) == (3, 2)
    dec = detect_frobenius(frob30)
    assert (dec.K.order, dec.complement_order) == (15, 2)
    assert detect_frobenius(s4) is None


def test_detect_two_frobenius_s4(s4):
    dec = detect_two_frobenius(s4)
    assert (dec.K.order, dec.L.order, dec.H_order, dec.index_G_L) == (4, 12, 3, 2)
    assert (dec.case_label, dec.p) == ("B", 2)
    assert dec.D_order == 8 and dec.N_order == 6


def test_detect_two_frobenius_examples(ex2, ex3, ex4):
    d2 = detect_two_frobenius(ex2)
    assert (d2.K.order, d2.H_order, d2.index_G_L, d2.case_label, d2.p) == (25, 3, 2, "C", 5)
    d3 = detect_two_frobenius(ex3)
    assert (d3.K.order, d3.H_order, d3.index_G_L, d3.case_label) == (100, 3, 2, "A")
    d4 = detect_two_frobenius(ex4)
    assert (d4.K.order, d4.H_order, d4.index_G_L, d4.case_label, d4.p) == (8, 7, 3, "C", 2)


@pytest.mark.parametrize("fixture", ["a4", "s3", "frob30", "q8"])
def test_not_two_frobenius(fixture, request):
    assert detect_two_frobenius(request.getfixturevalue(fixture)) is None


@pytest.mark.parametrize("name", ["Z8", "D4", "Heis3", "Z9:Z3"])
def test_p_groups_not_detected(name):
    G = enumerate_group(P_GROUPS[name][0])
    assert detect_two_frobenius(G) is None
    assert detect_frobenius(G) is None


def test_abelian_not_detected():
    G = enumerate_group(cyclic(12))
    assert detect_two_frobenius(G) is None


def test_find_cyclic_complement(s4, ex2):
    dec = detect_two_frobenius(s4)
    H = find_cyclic_complement(s4, dec.K, dec.L)
    assert H.order == 3
    gen = [int(i) for i in H.indices if s4.element_orders[i] == 3][0]
    assert len(s4.element(gen).cycles()) == 1 and len(s4.element(gen).cycles()[0]) == 3
    d2 = detect_two_frobenius(ex2)
    assert find_cyclic_complement(ex2, d2.K, d2.L).order == 3


def test_supplied_chain_is_verified(s4, a4):
    dec = detect_two_frobenius(s4)
    # swapping K and L gives a chain that fails verification
    assert detect_two_frobenius(s4, K=dec.L, L=dec.K) is None
    V = fitting(a4)
    assert detect_two_frobenius(a4, K=V, L=a4.whole()) is None


def test_verify_structure_s4(s4):
    checks = verify_structure(s4, detect_two_frobenius(s4))
    assert all(c.passed for c in checks), [c for c in checks if not c.passed]
    assert {c.name for c in checks} >= {"H cyclic of odd order", "Z(G) = 1"}


def test_verify_structure_reports_failures(s4):
    # a fabricated decomposition with the wrong K shows up as failing checks, not an exception
    dec = detect_two_frobenius(s4)
    bad = type(dec)(**{**dec.__dict__, "D_order": 9})
    checks = {c.name: c.passed for c in verify_structure(s4, bad)}
    assert not checks["D Hall: gcd(|K||G:L|, |H|) = 1"]
