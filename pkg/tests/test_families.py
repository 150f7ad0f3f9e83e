import pytest
from hypothesis import given, strategies as st

from egstab.canon import canonical_form
from egstab.cliques import count_cliques
from egstab.cycles import circ, hamilton_path
from egstab.errors import InvalidParameters, OutOfDomain
from egstab.families import (KFamilySpec, build_e, build_f_ell, build_gnk3,
                             build_h, build_special, build_z, contains_k_family_member,
                             enumerate_family, enumerate_k_family, h_parts, member_id,
                             validate_member)
from egstab.formulas import ell, h_s
from egstab.graph import complete_graph, cycle_graph, is_two_connected
from egstab.subgraph import contains_subgraph


def test_build_h_counts():
    g = build_h(9, 9, 3)
    assert g.n == 9 and g.num_edges() == 24 == count_cliques(g, 2)
    _, B, _ = h_parts(9, 9, 3)
    assert B.bit_count() == 3


def test_build_h_circumference():
    for k in range(5, 12):
        for a in range(2, (k - 1) // 2 + 1):
            for n in range(k, min(k + 3, 14) + 1):
                assert circ(build_h(n, k, a)) == k - 1


def test_build_h_domain():
    with pytest.raises(OutOfDomain):
        build_h(8, 9, 3)


def test_build_z():
    assert build_z(6, 9, 3) == complete_graph(6)
    with pytest.raises(InvalidParameters):
        build_z(11, 9, 3)
    z = build_z(12, 9, 3)
    assert z.n == 12 and circ(z) == 8 and is_two_connected(z)


def test_build_f_ell():
    for l in range(2, 7):
        g = build_f_ell(l)
        assert g.n == 2 * l + 2
        assert g.num_edges() == (2 * l - 2) + 3 * l
    assert circ(build_f_ell(4)) <= 9


def test_build_e_and_gnk3():
    e = build_e(5)
    assert e.n == 5 and e.num_edges() == 2
    assert build_gnk3(13, 10).n == 13


def test_enumerate_family_regressions():
    members = enumerate_family(9, 9, 3)
    assert len(members) == 1
    assert members[0].descriptor.ftype == "I"
    assert enumerate_family(10, 10, 4) == []


@pytest.mark.parametrize("k", range(9, 13))
def test_no_large_members_below_l_minus_2(k):
    l = ell(k)
    for r in range(1, l - 1):
        assert enumerate_family(k + 2, k, r) == []


def test_named_specials():
    f0 = build_special("F0", 12, 12, 3)
    d = f0.descriptor
    assert f0.graph.n == 12 and len(d.A) == len(d.B) == len(d.C) == len(d.D) == 3
    v = d.label("v")
    assert f0.graph.adj[v] & d.mask("D") == 0
    f4 = build_special("F4", 13, 12, 3)
    assert f4.graph.n == 13 and len(f4.descriptor.D) == 4
    assert validate_member(f4.graph, f4.descriptor).ok
    with pytest.raises(InvalidParameters):
        build_special("F5", 10, 10, 3)
    with pytest.raises(InvalidParameters):
        build_special("F9", 10, 10, 2)


def test_validate_member_negative_control():
    mem = enumerate_family(9, 9, 3)[0]
    rep = validate_member(build_h(9, 9, 3), mem.descriptor)
    assert not rep.ok


@pytest.mark.parametrize("k", range(5, 11))
def test_enumerate_family_valid_and_duplicate_free(k):
    for r in range(1, ell(k) + 1):
        for m in range(k, k + 2):
            members = enumerate_family(m, k, r)
            forms = [canonical_form(mem.graph) for mem in members]
            assert len(set(forms)) == len(forms)
            for mem in members:
                assert mem.graph.n == m
                assert circ(mem.graph) < k
                d = mem.descriptor
                assert hamilton_path(mem.graph, d.mask("A"), d.mask("B")) is not None


def test_k_family_alpha_zero_is_empty():
    for k in (7, 9, 10, 11):
        assert enumerate_k_family(KFamilySpec(k, 0)) == []


def test_k_family_k10_alpha1():
    ids = [member_id(mem) for mem in enumerate_k_family(KFamilySpec(10, 1, 11))]
    assert any(i.startswith("F5(10,10,2)") for i in ids)
    assert any(i.startswith("F(l)(10,10,4)") for i in ids)
    for mem in enumerate_k_family(KFamilySpec(10, 1, 11)):
        assert circ(mem.graph) < 10


def test_k_family_spec_domain():
    with pytest.raises(OutOfDomain):
        KFamilySpec(9, 3)


def test_h_does_not_contain_type_one_members():
    h = build_h(12, 9, 3)
    assert all(contains_subgraph(h, mem.graph) is None for mem in enumerate_family(9, 9, 3))


def test_contains_k_family_member():
    spec = KFamilySpec(10, 1)
    mem = enumerate_k_family(spec)[0]
    found = contains_k_family_member(mem.graph, spec)
    assert found is not None
    assert contains_k_family_member(cycle_graph(10), spec) is None


@given(st.data())
def test_k_family_containment_monotone(data):
    spec = KFamilySpec(9, 1)
    members = enumerate_k_family(spec)
    mem = data.draw(st.sampled_from(members))
    g = mem.graph
    for u, v in data.draw(st.lists(st.sampled_from(g.non_edges()), max_size=3)) if g.non_edges() else []:
        g = g.add_edge(u, v)
    assert contains_k_family_member(g, spec) is not None


@given(st.integers(5, 12), st.data())
def test_h_s_matches_construction(k, data):
    a = data.draw(st.integers(1, k // 2))
    n = data.draw(st.integers(k, 20))
    s = data.draw(st.integers(2, 5))
    assert count_cliques(build_h(n, k, a), s) == h_s(n, k, a, s)


def test_descriptor_record_roundtrip_keys():
    mem = build_special("F2", 10, 10, 2)
    rec = dict(line.split("=", 1) for line in mem.descriptor.record().splitlines())
    assert rec["type"] == mem.descriptor.ftype and rec["special"] == "F2"
    assert rec["m"] == "10" and rec["k"] == "10" and rec["r"] == "2"
