import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from egstab.canon import are_isomorphic, canonical_form
from egstab.enumeration import connected_graphs, two_connected_graphs
from egstab.errors import CapacityExceeded, InvalidInput, ParseError
from egstab.families import build_h, h_parts
from egstab.graph import (Graph, complete_graph, cycle_graph, from_edges, induced_subgraph,
                          is_connected, is_two_connected, path_graph)
from egstab.graph6 import decode, encode

from .conftest import to_nx
from .strategies import graphs


def test_from_edges_examples():
    k3 = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert k3 == complete_graph(3)
    e4 = from_edges(4, [])
    assert e4.n == 4 and e4.num_edges() == 0
    c5 = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert c5 == cycle_graph(5)


def test_from_edges_rejects_bad_input():
    with pytest.raises(InvalidInput):
        from_edges(3, [(0, 0)])
    with pytest.raises(InvalidInput):
        from_edges(3, [(0, 3)])
    with pytest.raises(CapacityExceeded):
        from_edges(65, [])


def test_graph6_hand_decoded_example():
    g = decode("D?{")
    assert g.n == 5
    assert set(g.edges()) == {(0, 4), (1, 4), (2, 4), (3, 4)}


def test_graph6_k1_and_roundtrip():
    assert encode(Graph(1, (0,))) == "@"
    assert decode(encode(cycle_graph(5))) == cycle_graph(5)


@pytest.mark.parametrize("bad", ["", "D?{x", "D?", "D?{ ", "~~????"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(ParseError):
        decode(bad)


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    ours = encode(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert decode(ours) == g


def test_connectivity_examples():
    assert is_connected(complete_graph(4)) and is_two_connected(complete_graph(4))
    bowtie = from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert is_connected(bowtie) and not is_two_connected(bowtie)
    p4 = path_graph(4)
    assert is_connected(p4) and not is_two_connected(p4)


@given(graphs(max_n=9))
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    if g.n >= 3:
        assert is_two_connected(g) == nx.is_biconnected(h)


def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(4), [0, 1, 2])[0] == complete_graph(3)
    assert induced_subgraph(cycle_graph(5), [0, 1, 2])[0] == path_graph(3)
    A, _, C = h_parts(9, 9, 3)
    sub, _ = induced_subgraph(build_h(9, 9, 3), A | C)
    assert sub == complete_graph(6)


@given(graphs(min_n=2, max_n=10), st.data())
def test_induced_subgraph_preserves_adjacency(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    sub, index_map = induced_subgraph(g, s)
    assert sorted(index_map) == sorted(s)
    for i, j in combinations(range(sub.n), 2):
        assert sub.has_edge(i, j) == g.has_edge(index_map[i], index_map[j])


def test_canonical_examples():
    c5 = cycle_graph(5)
    assert canonical_form(c5) == canonical_form(c5.relabel([2, 4, 1, 3, 0]))
    star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(path_graph(4)) != canonical_form(star)


def test_eleven_classes_on_four_vertices():
    pairs = list(combinations(range(4), 2))
    forms = {canonical_form(from_edges(4, [e for i, e in enumerate(pairs) if m >> i & 1]))
             for m in range(1 << len(pairs))}
    assert len(forms) == 11


def test_canonical_form_is_complete_invariant_up_to_seven(atlas):
    # the atlas lists each isomorphism class on <= 7 vertices exactly once
    forms = [canonical_form(g) for g in atlas]
    assert len(set(forms)) == len(atlas) == 1252
    rng = random.Random(7)
    for g in rng.sample(atlas, 200):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=8), graphs(max_n=8))
def test_canonical_equality_iff_isomorphic(g, h):
    same = canonical_form(g) == canonical_form(h)
    assert same == nx.is_isomorphic(to_nx(g), to_nx(h))
    assert are_isomorphic(g, h) == same


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_canonical_relabel_invariance(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_two_connected_small_counts():
    assert [g for g in two_connected_graphs(3)] == [complete_graph(3)]
    four = two_connected_graphs(4)
    assert len(four) == 3
    assert {g.num_edges() for g in four} == {4, 5, 6}
    assert len(two_connected_graphs(5)) == 10


def test_enumeration_matches_atlas(atlas):
    for n in range(1, 8):
        conn = [g for g in atlas if g.n == n and nx.is_connected(to_nx(g))]
        ours = connected_graphs(n)
        assert len(ours) == len(conn)
        assert {canonical_form(g) for g in ours} == {canonical_form(g) for g in conn}
        if n >= 3:
            two = [g for g in conn if nx.is_biconnected(to_nx(g))]
            assert {canonical_form(g) for g in two_connected_graphs(n)} == \
                {canonical_form(g) for g in two}


@pytest.mark.parametrize("n,count", [(8, 7123), (9, 194066)])
def test_two_connected_counts_large(n, count):
    assert len(two_connected_graphs(n)) == count


def test_enumerated_graphs_are_two_connected_and_roundtrip():
    for n in range(3, 9):
        for g in two_connected_graphs(n):
            assert is_two_connected(g)
            assert decode(encode(g)) == g
